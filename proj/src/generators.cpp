#include "mincut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mincut/random.hpp"

namespace mincut::gen {

namespace {

Weight draw_weight(std::mt19937_64& rng, WeightRange r) {
  if (r.lo < 1 || r.hi < r.lo) throw InputError("weight range must satisfy 1 <= lo <= hi");
  return std::uniform_int_distribution<Weight>(r.lo, r.hi)(rng);
}

void check_n(int n) {
  if (n < 1) throw InputError("vertex count must be positive");
}

// Joins the components of `edges` on 1..n with random bridging edges.
void connect(int n, std::vector<Edge>& edges, WeightRange weights, std::mt19937_64& rng) {
  detail::DisjointSets sets(n + 1);
  for (const Edge& e : edges) sets.unite(e.u, e.v);
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    const int r = sets.find(v);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(v);
  }
  for (std::size_t c = 1; c < comps.size(); ++c) {
    const auto& a = comps[c - 1];
    const auto& b = comps[c];
    const int u = a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)];
    const int v = b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng)];
    edges.push_back({u, v, draw_weight(rng, weights)});
  }
}

}  // namespace

WeightedGraph gnp(int n, double p, WeightRange weights, std::uint64_t seed) {
  check_n(n);
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  auto rng = make_rng(seed, 0);
  std::vector<Edge> edges;
  if (p > 0.0) {
    // Geometric skipping over the n(n-1)/2 candidate pairs.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double log_q = std::log1p(-std::min(p, 1.0 - 1e-12));
    long long v = 1;
    long long w = -1;
    while (v < n) {
      const double r = 1.0 - unit(rng);
      w += 1 + (p >= 1.0 ? 0 : static_cast<long long>(std::floor(std::log(r) / log_q)));
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n) edges.push_back({static_cast<int>(v) + 1, static_cast<int>(w) + 1, draw_weight(rng, weights)});
    }
  }
  connect(n, edges, weights, rng);
  return WeightedGraph(n, edges);
}

WeightedGraph tree_plus(int n, int extra, WeightRange weights, std::uint64_t seed) {
  check_n(n);
  if (extra < 0) throw InputError("extra edge count must be non-negative");
  auto rng = make_rng(seed, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.push_back({perm[i], perm[j], draw_weight(rng, weights)});
  }
  if (n >= 2) {
    std::uniform_int_distribution<int> vertex(1, n);
    for (int k = 0; k < extra; ++k) {
      int u = vertex(rng);
      int v = vertex(rng);
      while (v == u) v = vertex(rng);
      edges.push_back({u, v, draw_weight(rng, weights)});
    }
  }
  return WeightedGraph(n, edges);
}

WeightedGraph grid(int rows, int cols, WeightRange weights, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw InputError("grid dimensions must be positive");
  auto rng = make_rng(seed, 0);
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_weight(rng, weights)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_weight(rng, weights)});
    }
  }
  return WeightedGraph(rows * cols, edges);
}

PlantedGraph planted(int block_size, Weight intra, int cross_edges, Weight cross,
                     std::uint64_t seed) {
  if (block_size < 2) throw InputError("planted blocks need at least two vertices");
  if (cross_edges < 1) throw InputError("planted graph needs at least one crossing edge");
  if (intra < 1 || cross < 1) throw InputError("weights must be >= 1");
  auto rng = make_rng(seed, 0);
  const int n = 2 * block_size;
  // Shuffle labels so the planted side is not simply 1..block_size.
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (int b = 0; b < 2; ++b) {
    for (int i = 0; i < block_size; ++i) {
      for (int j = i + 1; j < block_size; ++j) {
        edges.push_back({label[b * block_size + i], label[b * block_size + j], intra});
      }
    }
  }
  std::uniform_int_distribution<int> pick(0, block_size - 1);
  for (int k = 0; k < cross_edges; ++k) {
    edges.push_back({label[pick(rng)], label[block_size + pick(rng)], cross});
  }
  PlantedGraph out{WeightedGraph(n, edges), {label.begin(), label.begin() + block_size}};
  std::sort(out.side.begin(), out.side.end());
  return out;
}

std::vector<int> random_spanning_tree(const WeightedGraph& g, std::uint64_t seed) {
  auto rng = make_rng(seed, 1);
  std::vector<std::uint64_t> key(g.edge_count());
  for (auto& k : key) k = rng();
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  detail::DisjointSets sets(g.vertex_count() + 1);
  std::vector<int> tree;
  for (int id : order) {
    if (sets.unite(g.edge(id).u, g.edge(id).v)) tree.push_back(id);
  }
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) {
    throw InputError("graph is disconnected; no spanning tree");
  }
  return tree;
}

}  // namespace mincut::gen
