#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/cost.hpp"
#include "mincut/tree.hpp"

namespace mincut {

/// An edge, named by its lower endpoint, together with its current cost.
struct EdgeMin {
  Cost cost = Cost::none();
  int edge = -1;

  friend bool operator<(const EdgeMin& a, const EdgeMin& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.edge < b.edge);
  }
};

/**
 * Static rooted tree with mutable edge costs supporting
 *   add(u, d)       -- add d to every edge on the u-to-root path,
 *   path_min(u)     -- minimum edge cost on the u-to-root path,
 *   subtree_min(u)  -- minimum edge cost strictly inside u's subtree.
 *
 * Backed by a size-guided heavy-path decomposition laid out so that every
 * heavy path and every subtree is a contiguous range of one lazy
 * range-add/range-min segment tree; each operation costs O(log^2 n).
 * Minimum ties resolve to the smaller lower-endpoint id.
 *
 * The tree must outlive the ScoreTree.
 */
class ScoreTree {
 public:
  /// initial[v] is the cost of the edge from v to its parent (ignored for the root).
  ScoreTree(const StaticTree& tree, std::span<const Cost> initial);

  const StaticTree& tree() const { return *tree_; }

  void add(int u, Cost delta);
  /// Throws std::invalid_argument when u is the root.
  Cost path_min(int u) { return path_min_edge(u).cost; }
  EdgeMin path_min_edge(int u);
  /// Throws std::invalid_argument when u is a leaf.
  EdgeMin subtree_min(int u);
  Cost edge_cost(int v);
  /// Writes the current cost of every edge of nodes [v, subtree_end(v)) into
  /// out[node - v]; O(subtree size + log n).
  void read_subtree(int v, std::span<Cost> out);

  std::uint64_t op_count() const { return ops_; }

 private:
  struct Item {
    Cost cost;
    int node;
  };
  static bool less(const Item& a, const Item& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.node < b.node);
  }

  void build(int idx, int lo, int hi, std::span<const Cost> initial);
  void apply(int idx, Cost d);
  void push(int idx);
  void range_add(int idx, int lo, int hi, int l, int r, Cost d);
  Item range_min(int idx, int lo, int hi, int l, int r);
  void collect(int idx, int lo, int hi, int l, int r, std::span<Cost> out, int base);

  const StaticTree* tree_;
  std::vector<int> heavy_;
  std::vector<int> head_;
  std::vector<int> pos_;
  std::vector<int> at_;  // position -> node
  std::vector<Item> seg_;
  std::vector<Cost> lazy_;
  int n_ = 0;
  std::uint64_t ops_ = 0;
};

}  // namespace mincut
