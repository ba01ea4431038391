#include "mincut/tree.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace mincut {

StaticTree StaticTree::from_preorder_parents(std::vector<int> parent) {
  const int n = static_cast<int>(parent.size());
  if (n == 0 || parent[0] != -1) throw std::invalid_argument("tree root must be node 0");
  StaticTree t;
  t.parent_ = std::move(parent);
  t.depth_.assign(n, 0);
  t.size_.assign(n, 1);
  t.child_begin_.assign(n + 1, 0);
  for (int v = 1; v < n; ++v) {
    int p = t.parent_[v];
    if (p < 0 || p >= v) throw std::invalid_argument("parent ids must precede children");
    ++t.child_begin_[p + 1];
    t.depth_[v] = t.depth_[p] + 1;
  }
  for (int v = 0; v < n; ++v) t.child_begin_[v + 1] += t.child_begin_[v];
  t.child_.resize(n > 0 ? n - 1 : 0);
  std::vector<int> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
  for (int v = 1; v < n; ++v) t.child_[fill[t.parent_[v]]++] = v;
  for (int v = n - 1; v > 0; --v) t.size_[t.parent_[v]] += t.size_[v];
  for (int v = 0; v < n; ++v) {
    int expect = v + 1;
    for (int c : t.children(v)) {
      if (c != expect) throw std::invalid_argument("node ids are not a preorder numbering");
      expect = c + t.size_[c];
    }
  }
  return t;
}

StaticTree StaticTree::from_children(const std::vector<std::vector<int>>& children, int root,
                                     std::vector<int>* new_id) {
  const int n = static_cast<int>(children.size());
  std::vector<int> id(n, -1);
  std::vector<int> parent;
  parent.reserve(n);
  // (node, parent's new id)
  std::vector<std::pair<int, int>> stack{{root, -1}};
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    if (id[v] != -1) throw std::invalid_argument("child lists do not describe a tree");
    id[v] = static_cast<int>(parent.size());
    parent.push_back(p);
    const auto& ch = children[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, id[v]);
  }
  if (static_cast<int>(parent.size()) != n) {
    throw std::invalid_argument("child lists do not reach every node");
  }
  if (new_id) *new_id = std::move(id);
  return from_preorder_parents(std::move(parent));
}

LcaIndex::LcaIndex(const StaticTree& tree) {
  const int n = tree.size();
  first_.assign(n, -1);
  euler_.reserve(2 * n);
  // Iterative Euler tour: (node, next child slot).
  std::vector<std::pair<int, int>> stack{{0, 0}};
  euler_.push_back(0);
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    auto ch = tree.children(v);
    if (slot < static_cast<int>(ch.size())) {
      const int c = ch[slot++];
      stack.emplace_back(c, 0);
      euler_.push_back(c);
    } else {
      stack.pop_back();
      if (!stack.empty()) euler_.push_back(stack.back().first);
    }
  }
  for (int i = 0; i < static_cast<int>(euler_.size()); ++i) {
    if (first_[euler_[i]] < 0) first_[euler_[i]] = i;
  }

  const int len = static_cast<int>(euler_.size());
  depth_.resize(len);
  for (int i = 0; i < len; ++i) depth_[i] = tree.depth(euler_[i]);
  const int levels = std::bit_width(static_cast<unsigned>(len));
  sparse_.resize(levels);
  sparse_[0].resize(len);
  for (int i = 0; i < len; ++i) sparse_[0][i] = i;
  for (int k = 1; k < levels; ++k) {
    const int span = 1 << k;
    sparse_[k].resize(len - span + 1);
    for (int i = 0; i + span <= len; ++i) {
      int a = sparse_[k - 1][i];
      int b = sparse_[k - 1][i + span / 2];
      sparse_[k][i] = depth_[b] < depth_[a] ? b : a;
    }
  }
}

int LcaIndex::lca(int u, int v) const {
  int l = first_[u];
  int r = first_[v];
  if (l > r) std::swap(l, r);
  const int k = std::bit_width(static_cast<unsigned>(r - l + 1)) - 1;
  int a = sparse_[k][l];
  int b = sparse_[k][r - (1 << k) + 1];
  return euler_[depth_[b] < depth_[a] ? b : a];
}

std::vector<int> RootedBinaryTree::vertices_below(int node) const {
  std::vector<int> out;
  for (int x = node; x < topo.subtree_end(node); ++x) {
    if (vertex[x] != kGadget) out.push_back(vertex[x]);
  }
  return out;
}

RootedBinaryTree build_spanning_tree_view(const WeightedGraph& g, std::span<const int> tree_edges) {
  const int n = g.vertex_count();
  if (static_cast<int>(tree_edges.size()) != n - 1) {
    throw InputError("spanning tree needs " + std::to_string(n - 1) + " edges, got " +
                     std::to_string(tree_edges.size()));
  }
  detail::DisjointSets sets(n + 1);
  // Adjacency in input order so that child order follows the edge listing.
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
  for (int id : tree_edges) {
    if (id < 0 || id >= g.edge_count()) throw InputError("tree edge is not an edge of the graph");
    const Edge& e = g.edge(id);
    if (!sets.unite(e.u, e.v)) {
      throw InputError("tree edges contain a cycle through (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    adj[e.u].emplace_back(e.v, id);
    adj[e.v].emplace_back(e.u, id);
  }

  // Build child lists over provisional ids, expanding high-degree vertices.
  std::vector<std::vector<int>> children(1);
  std::vector<Cost> cost(1, Cost::none());
  std::vector<int> vertex(1, kGadget);
  std::vector<int> gedge(1, -1);
  auto new_node = [&](int parent, int v, int edge_id, Cost c) {
    int id = static_cast<int>(children.size());
    children.emplace_back();
    cost.push_back(c);
    vertex.push_back(v);
    gedge.push_back(edge_id);
    children[parent].push_back(id);
    return id;
  };

  std::vector<int> node_of(n + 1, -1);
  node_of[1] = new_node(0, 1, -1, Cost::infinity());
  std::vector<int> stack{1};
  std::vector<char> seen(n + 1, 0);
  seen[1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    std::vector<std::pair<int, int>> kids;
    for (auto [w, id] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        kids.emplace_back(w, id);
      }
    }
    int attach = node_of[v];
    const int k = static_cast<int>(kids.size());
    for (int i = 0; i < k; ++i) {
      // Keep at most two children per node: once two slots would be
      // exceeded, hang the remainder under a gadget via an infinite edge.
      if (k - i > 1 && static_cast<int>(children[attach].size()) == 1) {
        attach = new_node(attach, kGadget, -1, Cost::infinity());
      }
      auto [w, id] = kids[i];
      node_of[w] = new_node(attach, w, id, Cost::finite(g.edge(id).w));
    }
    for (int i = k - 1; i >= 0; --i) stack.push_back(kids[i].first);
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[v]) throw InputError("tree edges do not span the graph");
  }

  std::vector<int> new_id;
  RootedBinaryTree t;
  t.topo = StaticTree::from_children(children, 0, &new_id);
  const int size = t.topo.size();
  t.edge_cost.resize(size);
  t.vertex.resize(size);
  t.graph_edge.resize(size);
  for (int old = 0; old < size; ++old) {
    t.edge_cost[new_id[old]] = cost[old];
    t.vertex[new_id[old]] = vertex[old];
    t.graph_edge[new_id[old]] = gedge[old];
  }
  t.node_of.assign(n + 1, -1);
  for (int v = 1; v <= n; ++v) t.node_of[v] = new_id[node_of[v]];
  t.lca = LcaIndex(t.topo);
  return t;
}

HeavyPathDecomposition heavy_decompose(const StaticTree& tree, std::span<const std::int64_t> load) {
  const int n = tree.size();
  HeavyPathDecomposition h;
  h.subtree_load.assign(load.begin(), load.end());
  for (int v = n - 1; v > 0; --v) h.subtree_load[tree.parent(v)] += h.subtree_load[v];
  h.heavy_child.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int c : tree.children(v)) {
      if (h.heavy_child[v] < 0 || h.subtree_load[c] > h.subtree_load[h.heavy_child[v]]) {
        h.heavy_child[v] = c;
      }
    }
  }
  h.light_size.assign(load.begin(), load.end());
  for (int v = 0; v < n; ++v) {
    for (int c : tree.children(v)) {
      if (c != h.heavy_child[v]) h.light_size[v] += h.subtree_load[c];
    }
  }
  h.path_of.assign(n, -1);
  h.index_in_path.assign(n, -1);
  // Preorder guarantees a path head is seen before the rest of its path.
  for (int v = 0; v < n; ++v) {
    if (h.path_of[v] >= 0) continue;
    const int id = static_cast<int>(h.paths.size());
    h.paths.emplace_back();
    h.nonzero_light.emplace_back();
    for (int x = v; x >= 0; x = h.heavy_child[x]) {
      h.path_of[x] = id;
      h.index_in_path[x] = static_cast<int>(h.paths[id].size());
      if (h.light_size[x] > 0) h.nonzero_light[id].push_back(h.index_in_path[x]);
      h.paths[id].push_back(x);
    }
  }
  return h;
}

}  // namespace mincut
