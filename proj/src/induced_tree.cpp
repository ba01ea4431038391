#include "mincut/induced_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mincut {

int InducedTree::node_of(int source_node) const {
  auto it = std::lower_bound(lambda.begin(), lambda.end(), source_node);
  if (it == lambda.end() || *it != source_node) return -1;
  return lambda_node[it - lambda.begin()];
}

namespace {

bool in_scope(const StaticTree& t, Scope s, int v) {
  if (v == s.root) return true;
  return s.child >= 0 ? t.is_ancestor(s.child, v) : t.is_ancestor(s.root, v);
}

void check_scope(const StaticTree& t, Scope s) {
  if (s.root < 0 || s.root >= t.size()) throw std::invalid_argument("scope root not in tree");
  if (s.child >= 0 && (s.child >= t.size() || t.parent(s.child) != s.root)) {
    throw std::invalid_argument("scope child is not a child of the scope root");
  }
}

std::vector<int> normalize_lambda(std::span<const int> lambda, const StaticTree& t, Scope s) {
  if (lambda.empty()) throw std::invalid_argument("lambda must be non-empty");
  std::vector<int> out;
  out.reserve(lambda.size());
  for (int v : lambda) {
    if (v < 0 || v >= t.size() || !in_scope(t, s, v)) {
      throw std::invalid_argument("lambda node " + std::to_string(v) + " is not in the source tree");
    }
    if (!out.empty()) {
      if (v < out.back()) throw std::invalid_argument("lambda is not in preorder");
      if (v == out.back()) continue;
    }
    out.push_back(v);
  }
  return out;
}

// Kept source nodes (sorted by preorder) with the index of their induced parent.
struct Skeleton {
  std::vector<int> nodes;
  std::vector<int> parent;
  bool has_empty = false;
};

int scope_size(const StaticTree& t, Scope s) {
  return s.child >= 0 ? 1 + t.subtree_size(s.child) : t.subtree_size(s.root);
}

// Maps between source ids and dense positions 0..scope_size-1 (preorder).
struct ScopeIndex {
  Scope s;
  int local(int v) const {
    if (s.child < 0) return v - s.root;
    return v == s.root ? 0 : v - s.child + 1;
  }
  int source(int i) const {
    if (s.child < 0) return s.root + i;
    return i == 0 ? s.root : s.child + i - 1;
  }
};

InducedTree assemble(const Skeleton& sk, std::vector<int> lambda, Scope scope, std::size_t layers) {
  InducedTree t;
  const int k = static_cast<int>(sk.nodes.size());
  const int off = sk.has_empty ? 1 : 0;
  const int total = k + 2 * off;
  std::vector<int> parent(total, -1);
  t.origin.assign(total, kSynthetic);
  t.in_lambda.assign(total, 0);
  for (int i = 0; i < k; ++i) {
    t.origin[i + off] = sk.nodes[i];
    parent[i + off] = sk.parent[i] < 0 ? (off ? 0 : -1) : sk.parent[i] + off;
  }
  if (off) {
    parent[0] = -1;
    parent[total - 1] = 0;
    t.empty_edge = total - 1;
  }
  t.source_root = off;
  t.topo = StaticTree::from_preorder_parents(std::move(parent));
  t.lambda_node.resize(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    auto it = std::lower_bound(sk.nodes.begin(), sk.nodes.end(), lambda[j]);
    const int node = static_cast<int>(it - sk.nodes.begin()) + off;
    t.lambda_node[j] = node;
    t.in_lambda[node] = 1;
  }
  t.lambda = std::move(lambda);
  t.scope = scope;
  t.layers.resize(layers);
  for (auto& layer : t.layers) {
    layer.cost.assign(total, Cost::none());
    layer.witness.assign(total, -1);
    if (off) layer.cost[t.source_root] = Cost::infinity();
  }
  return t;
}

// Single pass over the scope: which nodes survive and which induced edge
// every source edge collapses into (-1: no Lambda node below it).
struct SweepPlan {
  Skeleton skeleton;
  std::vector<int> edge_class;  // per local index, skeleton index or -1
};

SweepPlan plan_sweep(const StaticTree& src, Scope scope, const std::vector<int>& lambda) {
  const ScopeIndex idx{scope};
  const int len = scope_size(src, scope);
  std::vector<int> count(len, 0);
  for (int v : lambda) count[idx.local(v)] = 1;
  std::vector<char> is_lambda(count.begin(), count.end());
  std::vector<int> live_children(len, 0);
  std::vector<int> parent(len, -1);
  for (int i = 1; i < len; ++i) parent[i] = idx.local(src.parent(idx.source(i)));
  for (int i = len - 1; i > 0; --i) {
    if (count[i] > 0) {
      count[parent[i]] += count[i];
      ++live_children[parent[i]];
    }
  }
  std::vector<char> kept(len, 0);
  SweepPlan plan;
  std::vector<int> skel_index(len, -1);
  for (int i = 0; i < len; ++i) {
    kept[i] = i == 0 || is_lambda[i] || live_children[i] >= 2;
    if (kept[i]) {
      skel_index[i] = static_cast<int>(plan.skeleton.nodes.size());
      plan.skeleton.nodes.push_back(idx.source(i));
    }
  }
  // Nearest kept proper ancestor, top-down.
  std::vector<int> anc(len, -1);
  plan.skeleton.parent.assign(plan.skeleton.nodes.size(), -1);
  for (int i = 1; i < len; ++i) {
    anc[i] = kept[parent[i]] ? parent[i] : anc[parent[i]];
    if (kept[i]) plan.skeleton.parent[skel_index[i]] = skel_index[anc[i]];
  }
  // Bottom-up: the topmost kept node at or below i along the unique live chain.
  std::vector<int> pending(len, -1);
  plan.edge_class.assign(len, -1);
  for (int i = len - 1; i > 0; --i) {
    if (count[i] == 0) {
      plan.skeleton.has_empty = true;
      continue;
    }
    const int top = kept[i] ? i : pending[i];
    plan.edge_class[i] = skel_index[top];
    pending[parent[i]] = top;
  }
  return plan;
}

// Reduces per-local source costs into induced edge costs (first minimum in
// preorder wins ties).
void reduce_layer(const SweepPlan& plan, const InducedTree& t, const ScopeIndex& idx,
                  std::span<const Cost> cost, std::span<const int> witness, CostLayer& out) {
  const int off = t.empty_edge >= 0 ? 1 : 0;
  for (int i = 1; i < static_cast<int>(plan.edge_class.size()); ++i) {
    const int target = plan.edge_class[i] < 0 ? t.empty_edge : plan.edge_class[i] + off;
    if (cost[i] < out.cost[target]) {
      out.cost[target] = cost[i];
      out.witness[target] = witness.empty() ? idx.source(i) : witness[i];
    }
  }
}

int ceil_log2(int n) { return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(n)))); }

// Min over the scope's edges in the live source.
EdgeMin scope_min(ScoreTree& src, Scope scope) {
  const StaticTree& t = src.tree();
  if (scope.child >= 0) {
    EdgeMin best{src.edge_cost(scope.child), scope.child};
    if (!t.is_leaf(scope.child)) best = std::min(best, src.subtree_min(scope.child));
    return best;
  }
  if (t.is_leaf(scope.root)) return {};
  return src.subtree_min(scope.root);
}

// Cost of the source path from `lower` up to its ancestor `upper`.
EdgeMin painted_path_min(ScoreTree& src, int upper, int lower) {
  src.add(upper, Cost::paint());
  EdgeMin m = src.path_min_edge(lower);
  src.add(upper, -Cost::paint());
  return m;
}

// Min over scope edges with no Lambda node below, if any such edge exists.
EdgeMin painted_empty_min(ScoreTree& src, Scope scope, const std::vector<int>& lambda) {
  for (int v : lambda) {
    if (v != scope.root) src.add(v, Cost::paint());
  }
  EdgeMin m = scope_min(src, scope);
  for (int v : lambda) {
    if (v != scope.root) src.add(v, -Cost::paint());
  }
  if (m.edge < 0 || m.cost.is_painted()) return {};
  return m;
}

void paint_costs(InducedTree& t, ScoreTree& src) {
  CostLayer& layer = t.layers.front();
  for (int v = 0; v < t.size(); ++v) {
    if (v == 0 || t.origin[v] == kSynthetic) continue;
    const int p = t.topo.parent(v);
    if (t.origin[p] == kSynthetic) continue;  // infinite edge under the synthetic root
    EdgeMin m = painted_path_min(src, t.origin[p], t.origin[v]);
    layer.cost[v] = m.cost;
    layer.witness[v] = m.edge;
  }
  if (t.empty_edge >= 0) {
    EdgeMin m = painted_empty_min(src, t.scope, t.lambda);
    layer.cost[t.empty_edge] = m.cost;
    layer.witness[t.empty_edge] = m.edge;
  }
}

Skeleton scan_skeleton(const StaticTree& tree, const LcaIndex& lca, Scope scope,
                       const std::vector<int>& lambda, OpCounter* counter) {
  std::vector<int> seq;
  seq.reserve(lambda.size() + 1);
  if (lambda.front() != scope.root) seq.push_back(scope.root);
  seq.insert(seq.end(), lambda.begin(), lambda.end());

  std::vector<std::pair<int, int>> links;  // (node, parent node)
  std::vector<int> stack{seq.front()};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const int v = seq[i];
    const int x = lca.lca(stack.back(), v);
    if (counter) ++counter->lca_queries;
    while (stack.size() >= 2 && tree.depth(stack[stack.size() - 2]) >= tree.depth(x)) {
      links.emplace_back(stack.back(), stack[stack.size() - 2]);
      stack.pop_back();
    }
    if (stack.back() != x) {
      links.emplace_back(stack.back(), x);
      stack.pop_back();
      stack.push_back(x);
    }
    stack.push_back(v);
  }
  while (stack.size() >= 2) {
    links.emplace_back(stack.back(), stack[stack.size() - 2]);
    stack.pop_back();
  }
  links.emplace_back(stack.back(), -1);
  std::sort(links.begin(), links.end());

  Skeleton sk;
  sk.nodes.reserve(links.size());
  for (auto [v, p] : links) sk.nodes.push_back(v);
  sk.parent.reserve(links.size());
  for (auto [v, p] : links) {
    sk.parent.push_back(p < 0 ? -1
                              : static_cast<int>(std::lower_bound(sk.nodes.begin(), sk.nodes.end(), p) -
                                                 sk.nodes.begin()));
  }
  return sk;
}

}  // namespace

InducedTree build_induced(ScoreTree& source, const LcaIndex& lca, std::span<const int> lambda,
                          Scope scope, InduceStrategy strategy, OpCounter* counter) {
  const StaticTree& tree = source.tree();
  check_scope(tree, scope);
  std::vector<int> lam = normalize_lambda(lambda, tree, scope);
  const int len = scope_size(tree, scope);
  const int query_weight = ceil_log2(tree.size());
  // Painted queries per induced edge plus painting for the empty class.
  const long long scan_cost = 6LL * static_cast<long long>(lam.size() + 1) * query_weight;
  if (strategy == InduceStrategy::kAuto) {
    strategy = len <= scan_cost ? InduceStrategy::kSweep : InduceStrategy::kScan;
  }

  if (strategy == InduceStrategy::kSweep) {
    SweepPlan plan = plan_sweep(tree, scope, lam);
    InducedTree t = assemble(plan.skeleton, std::move(lam), scope, 1);
    std::vector<Cost> costs(len);
    if (scope.child >= 0) {
      source.read_subtree(scope.child, std::span<Cost>(costs).subspan(1));
    } else {
      source.read_subtree(scope.root, costs);
    }
    reduce_layer(plan, t, ScopeIndex{scope}, costs, {}, t.layers.front());
    if (counter) counter->induced_work += static_cast<std::uint64_t>(len);
    return t;
  }

  const std::uint64_t before = source.op_count();
  Skeleton sk = scan_skeleton(tree, lca, scope, lam, counter);
  EdgeMin empty = painted_empty_min(source, scope, lam);
  sk.has_empty = empty.edge >= 0;
  InducedTree t = assemble(sk, std::move(lam), scope, 1);
  paint_costs(t, source);
  if (counter) {
    counter->induced_work += (source.op_count() - before) * static_cast<std::uint64_t>(query_weight);
  }
  return t;
}

InducedTree induce_plain(const StaticTree& source, std::span<const CostLayer> layers,
                         std::span<const int> lambda, OpCounter* counter) {
  const Scope scope{};
  std::vector<int> lam = normalize_lambda(lambda, source, scope);
  SweepPlan plan = plan_sweep(source, scope, lam);
  InducedTree t = assemble(plan.skeleton, std::move(lam), scope, layers.size());
  for (std::size_t k = 0; k < layers.size(); ++k) {
    reduce_layer(plan, t, ScopeIndex{scope}, layers[k].cost, layers[k].witness, t.layers[k]);
  }
  if (counter) counter->induced_work += static_cast<std::uint64_t>(source.size());
  return t;
}

void recost_from_source(InducedTree& t, ScoreTree& source, OpCounter* counter) {
  const std::uint64_t before = source.op_count();
  paint_costs(t, source);
  if (counter) {
    counter->induced_work += (source.op_count() - before) *
                             static_cast<std::uint64_t>(ceil_log2(source.tree().size()));
  }
}

}  // namespace mincut
