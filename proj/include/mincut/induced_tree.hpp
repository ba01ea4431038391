#pragma once

#include <span>
#include <vector>

#include "mincut/cost.hpp"
#include "mincut/score_tree.hpp"
#include "mincut/stats.hpp"
#include "mincut/tree.hpp"

namespace mincut {

/// Edge costs of a tree plus, per edge, the source edge realizing the cost
/// (-1 when no source edge does, e.g. a synthetic infinite edge).
struct CostLayer {
  std::vector<Cost> cost;
  std::vector<int> witness;
};

/// Part of a source tree being induced on: the whole subtree of `root`, or,
/// when `child` >= 0, only the edge (root, child) and the subtree of `child`.
struct Scope {
  int root = 0;
  int child = -1;
};

inline constexpr int kSynthetic = -1;

/**
 * Compact tree over a node set Lambda, its pairwise LCAs and the scope root.
 *
 * Every induced edge (p, v) stands for the source path from v up to p; the
 * source edges on that path are exactly those whose subtree meets Lambda in
 * the same set, and the induced edge costs the minimum over them. If some
 * source edge has no Lambda node below it, a synthetic root is added above
 * the old root (joined by an infinite edge) together with a synthetic leaf
 * whose edge costs the minimum over all such source edges.
 */
struct InducedTree {
  StaticTree topo;
  std::vector<int> origin;       // induced node -> source node, or kSynthetic
  std::vector<char> in_lambda;   // per induced node
  std::vector<int> lambda;       // deduplicated Lambda in source preorder
  std::vector<int> lambda_node;  // lambda[i] -> induced node
  int empty_edge = -1;           // induced node of the synthetic leaf, if any
  int source_root = 0;           // induced node standing for the scope root
  Scope scope;
  std::vector<CostLayer> layers;

  int size() const { return topo.size(); }
  const std::vector<Cost>& cost() const { return layers.front().cost; }
  const std::vector<int>& witness() const { return layers.front().witness; }
  bool is_synthetic_infinite_edge(int v) const {
    return empty_edge >= 0 && v == source_root;
  }
  /// Induced node for a Lambda member; -1 if `source_node` is not in Lambda.
  int node_of(int source_node) const;
};

enum class InduceStrategy {
  kAuto,   // pick the cheaper of the two below
  kScan,   // stack scan over Lambda with LCA queries, costs via painted path queries
  kSweep,  // one pass over every source node in scope
};

/// Induces on the live ScoreTree `source` (whose tree `lca` indexes).
/// `lambda` must be non-empty and in non-decreasing preorder; nodes outside
/// the scope are rejected with std::invalid_argument. The source costs are
/// temporarily modified and restored exactly.
InducedTree build_induced(ScoreTree& source, const LcaIndex& lca, std::span<const int> lambda,
                          Scope scope = {}, InduceStrategy strategy = InduceStrategy::kAuto,
                          OpCounter* counter = nullptr);

/// Induces on a plain tree with one or more cost layers, sweeping every node
/// once per call. A layer with an empty witness vector uses node ids as
/// witnesses.
InducedTree induce_plain(const StaticTree& source, std::span<const CostLayer> layers,
                         std::span<const int> lambda, OpCounter* counter = nullptr);

/// Refreshes layer 0 of `t` from the current costs of the ScoreTree it was
/// built on, using painted path queries.
void recost_from_source(InducedTree& t, ScoreTree& source, OpCounter* counter = nullptr);

}  // namespace mincut
