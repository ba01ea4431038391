#include "mincut/score_tree.hpp"

#include <stdexcept>

namespace mincut {

ScoreTree::ScoreTree(const StaticTree& tree, std::span<const Cost> initial)
    : tree_(&tree), n_(tree.size()) {
  if (static_cast<int>(initial.size()) != n_) {
    throw std::invalid_argument("ScoreTree: one initial cost per node required");
  }
  heavy_.assign(n_, -1);
  for (int v = 0; v < n_; ++v) {
    for (int c : tree.children(v)) {
      if (heavy_[v] < 0 || tree.subtree_size(c) > tree.subtree_size(heavy_[v])) heavy_[v] = c;
    }
  }
  head_.assign(n_, 0);
  pos_.assign(n_, 0);
  at_.assign(n_, 0);
  std::vector<int> stack{0};
  int next = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    pos_[v] = next;
    at_[next++] = v;
    auto ch = tree.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
      if (*it != heavy_[v]) {
        head_[*it] = *it;
        stack.push_back(*it);
      }
    }
    if (heavy_[v] >= 0) {
      head_[heavy_[v]] = head_[v];
      stack.push_back(heavy_[v]);
    }
  }
  seg_.resize(4 * static_cast<std::size_t>(n_));
  lazy_.assign(4 * static_cast<std::size_t>(n_), Cost{});
  build(1, 0, n_ - 1, initial);
}

void ScoreTree::build(int idx, int lo, int hi, std::span<const Cost> initial) {
  if (lo == hi) {
    const int node = at_[lo];
    seg_[idx] = {node == 0 ? Cost::none() : initial[node], node};
    return;
  }
  const int mid = (lo + hi) / 2;
  build(2 * idx, lo, mid, initial);
  build(2 * idx + 1, mid + 1, hi, initial);
  seg_[idx] = less(seg_[2 * idx + 1], seg_[2 * idx]) ? seg_[2 * idx + 1] : seg_[2 * idx];
}

void ScoreTree::apply(int idx, Cost d) {
  seg_[idx].cost += d;
  lazy_[idx] += d;
}

void ScoreTree::push(int idx) {
  if (lazy_[idx] != Cost{}) {
    apply(2 * idx, lazy_[idx]);
    apply(2 * idx + 1, lazy_[idx]);
    lazy_[idx] = Cost{};
  }
}

void ScoreTree::range_add(int idx, int lo, int hi, int l, int r, Cost d) {
  if (r < lo || hi < l) return;
  if (l <= lo && hi <= r) {
    apply(idx, d);
    return;
  }
  push(idx);
  const int mid = (lo + hi) / 2;
  range_add(2 * idx, lo, mid, l, r, d);
  range_add(2 * idx + 1, mid + 1, hi, l, r, d);
  seg_[idx] = less(seg_[2 * idx + 1], seg_[2 * idx]) ? seg_[2 * idx + 1] : seg_[2 * idx];
}

ScoreTree::Item ScoreTree::range_min(int idx, int lo, int hi, int l, int r) {
  if (l <= lo && hi <= r) return seg_[idx];
  push(idx);
  const int mid = (lo + hi) / 2;
  if (r <= mid) return range_min(2 * idx, lo, mid, l, r);
  if (l > mid) return range_min(2 * idx + 1, mid + 1, hi, l, r);
  Item a = range_min(2 * idx, lo, mid, l, r);
  Item b = range_min(2 * idx + 1, mid + 1, hi, l, r);
  return less(b, a) ? b : a;
}

void ScoreTree::collect(int idx, int lo, int hi, int l, int r, std::span<Cost> out, int base) {
  if (r < lo || hi < l) return;
  if (lo == hi) {
    out[at_[lo] - base] = seg_[idx].cost;
    return;
  }
  push(idx);
  const int mid = (lo + hi) / 2;
  collect(2 * idx, lo, mid, l, r, out, base);
  collect(2 * idx + 1, mid + 1, hi, l, r, out, base);
}

void ScoreTree::add(int u, Cost delta) {
  ++ops_;
  while (u != 0) {
    const int h = head_[u];
    const int l = h == 0 ? pos_[h] + 1 : pos_[h];
    if (l <= pos_[u]) range_add(1, 0, n_ - 1, l, pos_[u], delta);
    u = h == 0 ? 0 : tree_->parent(h);
  }
}

EdgeMin ScoreTree::path_min_edge(int u) {
  if (u == 0) throw std::invalid_argument("path_min: the root has no path edges");
  ++ops_;
  Item best{Cost::none(), -1};
  while (u != 0) {
    const int h = head_[u];
    const int l = h == 0 ? pos_[h] + 1 : pos_[h];
    if (l <= pos_[u]) {
      Item it = range_min(1, 0, n_ - 1, l, pos_[u]);
      if (best.node < 0 || less(it, best)) best = it;
    }
    u = h == 0 ? 0 : tree_->parent(h);
  }
  return {best.cost, best.node};
}

EdgeMin ScoreTree::subtree_min(int u) {
  if (tree_->is_leaf(u)) throw std::invalid_argument("subtree_min: leaf subtree has no edges");
  ++ops_;
  Item it = range_min(1, 0, n_ - 1, pos_[u] + 1, pos_[u] + tree_->subtree_size(u) - 1);
  return {it.cost, it.node};
}

Cost ScoreTree::edge_cost(int v) {
  ++ops_;
  return range_min(1, 0, n_ - 1, pos_[v], pos_[v]).cost;
}

void ScoreTree::read_subtree(int v, std::span<Cost> out) {
  ++ops_;
  const int size = tree_->subtree_size(v);
  if (static_cast<int>(out.size()) < size) throw std::invalid_argument("read_subtree: buffer too small");
  collect(1, 0, n_ - 1, pos_[v], pos_[v] + size - 1, out, v);
}

}  // namespace mincut
