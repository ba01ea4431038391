#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/cost.hpp"
#include "mincut/graph.hpp"

namespace mincut {

/**
 * Immutable rooted tree whose node ids are a preorder numbering: the root is
 * 0, and the subtree of v is exactly the id range [v, v + subtree_size(v)).
 * The edge "of" a non-root node v is the edge to its parent.
 */
class StaticTree {
 public:
  StaticTree() = default;

  /// parent[0] must be -1 and ids must already form a preorder numbering
  /// (children listed in increasing id order); throws std::invalid_argument
  /// otherwise.
  static StaticTree from_preorder_parents(std::vector<int> parent);

  /// Renumbers an arbitrary rooted tree, given as child lists, into preorder.
  /// Returns the permutation old id -> new id through `new_id`.
  static StaticTree from_children(const std::vector<std::vector<int>>& children, int root,
                                  std::vector<int>* new_id);

  int size() const { return static_cast<int>(parent_.size()); }
  static constexpr int root() { return 0; }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  int subtree_size(int v) const { return size_[v]; }
  int subtree_end(int v) const { return v + size_[v]; }
  std::span<const int> children(int v) const {
    return {child_.data() + child_begin_[v], child_.data() + child_begin_[v + 1]};
  }
  bool is_leaf(int v) const { return size_[v] == 1; }
  /// True when a is an ancestor of b or a == b.
  bool is_ancestor(int a, int b) const { return a <= b && b < a + size_[a]; }

 private:
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> size_;
  std::vector<int> child_begin_;
  std::vector<int> child_;
};

/// Constant-time lowest common ancestor over an Euler tour with a sparse
/// table of depth minima.
class LcaIndex {
 public:
  LcaIndex() = default;
  explicit LcaIndex(const StaticTree& tree);

  int lca(int u, int v) const;

 private:
  std::vector<int> first_;
  std::vector<int> euler_;
  std::vector<int> depth_;                // depth of euler_[i]
  std::vector<std::vector<int>> sparse_;  // argmin index into euler_
};

inline constexpr int kGadget = 0;

/**
 * Spanning tree of a graph turned into a rooted binary tree.
 *
 * Node 0 is an artificial root joined to the node of vertex 1 by an infinite
 * edge. Vertices with more than two tree children are expanded into a chain
 * of gadget nodes linked by infinite edges; each original tree edge keeps its
 * graph weight.
 */
struct RootedBinaryTree {
  StaticTree topo;
  LcaIndex lca;
  std::vector<Cost> edge_cost;   // per node: cost of its parent edge
  std::vector<int> vertex;       // per node: graph vertex, or kGadget
  std::vector<int> graph_edge;   // per node: graph edge id of its parent edge, or -1
  std::vector<int> node_of;      // per graph vertex: its node

  int size() const { return topo.size(); }
  bool is_original_edge(int node) const { return node != 0 && graph_edge[node] >= 0; }
  /// Graph vertices lying in the subtree of `node`.
  std::vector<int> vertices_below(int node) const;
};

/// Validates `tree_edges` (graph edge ids) as a spanning tree of g and builds
/// the binarized view rooted at vertex 1. Throws InputError on a wrong edge
/// count, a cycle, or a disconnected selection.
RootedBinaryTree build_spanning_tree_view(const WeightedGraph& g, std::span<const int> tree_edges);

/**
 * Heavy-path decomposition guided by node loads.
 *
 * heavy_child[v] is the child with the largest subtree load (ties go to the
 * child with the smaller preorder id). Paths are listed top to bottom.
 * light_size[v] = load(v) + subtree load of v's light children.
 */
struct HeavyPathDecomposition {
  std::vector<int> heavy_child;            // -1 for leaves
  std::vector<std::int64_t> subtree_load;
  std::vector<std::int64_t> light_size;
  std::vector<int> path_of;                // node -> path id
  std::vector<int> index_in_path;          // node -> position on its path
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> nonzero_light;  // per path: positions with light_size > 0
};

HeavyPathDecomposition heavy_decompose(const StaticTree& tree, std::span<const std::int64_t> load);

}  // namespace mincut
