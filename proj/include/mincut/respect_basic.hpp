#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/score_tree.hpp"
#include "mincut/stats.hpp"
#include "mincut/tree.hpp"

namespace mincut {

/**
 * Per tree edge (named by its lower node) the total weight of graph edges
 * with exactly one endpoint below it, and per node the graph edges whose
 * endpoints have that node as LCA.
 *
 * Gadget edges and the artificial root edge get an infinite part so that
 * they never win a minimum.
 */
struct RespectScores {
  std::vector<Cost> a;
  std::vector<std::vector<int>> lca_list;
};

RespectScores compute_A(const WeightedGraph& g, const RootedBinaryTree& t);

/// ScoreTree costs: infinite for gadget edges, zero otherwise, plus the
/// weight of every graph edge added along its tree path.
ScoreTree crossing_score_tree(const WeightedGraph& g, const RootedBinaryTree& t);

/// The cut whose side holds the vertices below exactly one of the lower
/// nodes e1, e2 (e2 = -1 for a single edge). Weight is taken as given.
CutResult tree_cut(const WeightedGraph& g, const RootedBinaryTree& t, int e1, int e2, Weight weight);

/// Best cut crossed by one original tree edge. Ties go to the smaller node.
CutResult min_1respect(const WeightedGraph& g, const RootedBinaryTree& t,
                       const RespectScores& scores);

/// Called at every original edge (lower node x) when the tour reaches it,
/// before x's own LCA list is applied: score(q) for q below x is then the
/// cut weight of the pair minus A.
using DescendantObserver = std::function<void(int x, Cost a, ScoreTree& scores)>;

/// Best cut determined by an edge and one of its descendants; std::nullopt
/// if no such pair exists.
std::optional<CutResult> min_2respect_descendant(const WeightedGraph& g, const RootedBinaryTree& t,
                                                 const RespectScores& scores,
                                                 const DescendantObserver& observer = {},
                                                 OpCounter* counter = nullptr);

}  // namespace mincut
