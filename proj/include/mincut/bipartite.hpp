#pragma once

#include <optional>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/induced_tree.hpp"
#include "mincut/respect_basic.hpp"
#include "mincut/stats.hpp"
#include "mincut/tree.hpp"

namespace mincut {

/// Edge `a` of t1 and `b` of t2 are nodes; a cross edge counts toward every
/// pair (e1, e2) with a below e1 and b below e2.
struct CrossEdge {
  int a = 0;
  int b = 0;
  Cost cost;
};

/**
 * Two edge-cost trees and signed cross edges. The objective of a pair of
 * tree edges (named by their lower nodes) is c1[e1] + c2[e2] plus the cost
 * of every cross edge below both. cost[0] (the root) is ignored.
 */
struct BipartiteProblem {
  StaticTree t1;
  std::vector<Cost> c1;
  StaticTree t2;
  std::vector<Cost> c2;
  std::vector<CrossEdge> cross;

  std::size_t size() const { return t1.size() + t2.size() + cross.size(); }
};

struct BipartiteSolution {
  Cost value = Cost::none();
  int e1 = -1;
  int e2 = -1;
  /// Per t1 edge: best objective over all t2 edges and the t2 edge reaching it.
  std::vector<Cost> best;
  std::vector<int> partner;
};

struct BipartiteStats {
  int max_depth = 0;
  std::uint64_t fragments = 0;
};

/// Throws std::invalid_argument on cross endpoints outside the trees.
BipartiteSolution solve_bipartite(const BipartiteProblem& p, BipartiteStats* stats = nullptr,
                                  OpCounter* counter = nullptr);

/// Reference answer by enumerating every pair; O(|t1| |t2| |cross|).
BipartiteSolution brute_force_bipartite(const BipartiteProblem& p);

/// A bipartite problem for the two child subtrees of one branching node of
/// the binarized tree, with per-node source witnesses for both trees.
struct ReducedProblem {
  int branch = 0;
  BipartiteProblem problem;
  std::vector<int> witness1;
  std::vector<int> witness2;
};

/// One problem per node with two children, in preorder of that node.
/// `crossing` must hold the crossing weight of every tree edge.
std::vector<ReducedProblem> build_bipartite_problems(const WeightedGraph& g,
                                                     const RootedBinaryTree& t,
                                                     const RespectScores& scores,
                                                     ScoreTree& crossing,
                                                     OpCounter* counter = nullptr);

/// Best cut determined by two edges, neither below the other.
std::optional<CutResult> min_2respect_independent(const WeightedGraph& g, const RootedBinaryTree& t,
                                                  const RespectScores& scores,
                                                  OpCounter* counter = nullptr,
                                                  BipartiteStats* stats = nullptr);

}  // namespace mincut
