#include "mincut/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "mincut/random.hpp"

namespace mincut {

namespace {

using Wide = __int128;

// One round structure for the certificate loop: contracted vertices
// 1..n with the original vertices each one stands for.
struct Working {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> members;
};

std::vector<int> matula(Working cur, double epsilon, int* rounds) {
  Weight best = INT64_MAX;
  std::vector<int> best_side;
  const long double factor = 2.0L + epsilon;
  while (cur.n >= 2) {
    ++*rounds;
    std::vector<Weight> deg(cur.n + 1, 0);
    for (const Edge& e : cur.edges) {
      deg[e.u] += e.w;
      deg[e.v] += e.w;
    }
    int low = 1;
    for (int v = 2; v <= cur.n; ++v) {
      if (deg[v] < deg[low]) low = v;
    }
    if (deg[low] < best) {
      best = deg[low];
      best_side = cur.members[low];
    }
    if (cur.n <= 2) break;

    std::vector<std::vector<std::pair<int, int>>> adj(cur.n + 1);
    for (int i = 0; i < static_cast<int>(cur.edges.size()); ++i) {
      adj[cur.edges[i].u].emplace_back(cur.edges[i].v, i);
      adj[cur.edges[i].v].emplace_back(cur.edges[i].u, i);
    }
    // Maximum-adjacency order; an edge scanned when its far end reaches
    // attachment r has endpoints at least r-connected.
    std::vector<Weight> attach(cur.n + 1, 0);
    std::vector<char> done(cur.n + 1, 0);
    std::priority_queue<std::pair<Weight, int>> heap;
    heap.emplace(0, 1);
    detail::DisjointSets sets(cur.n + 1);
    int merged = 0;
    while (!heap.empty()) {
      auto [key, v] = heap.top();
      heap.pop();
      if (done[v] || key != attach[v]) continue;
      done[v] = 1;
      for (auto [y, id] : adj[v]) {
        if (done[y]) continue;
        attach[y] += cur.edges[id].w;
        if (static_cast<long double>(attach[y]) * factor >= static_cast<long double>(deg[low])) {
          if (sets.unite(v, y)) ++merged;
        }
        heap.emplace(attach[y], y);
      }
    }
    if (merged == 0) throw std::logic_error("approx_min_cut: certificate round contracted nothing");

    std::vector<int> id(cur.n + 1, 0);
    Working next;
    for (int v = 1; v <= cur.n; ++v) {
      const int r = sets.find(v);
      if (id[r] == 0) {
        id[r] = ++next.n;
        next.members.resize(next.n + 1);
      }
      auto& m = next.members[id[r]];
      m.insert(m.end(), cur.members[v].begin(), cur.members[v].end());
    }
    std::vector<Edge> raw;
    for (const Edge& e : cur.edges) {
      const int a = id[sets.find(e.u)];
      const int b = id[sets.find(e.v)];
      if (a != b) raw.push_back({a, b, e.w});
    }
    const WeightedGraph merged_graph(next.n, raw);
    next.edges.assign(merged_graph.edges().begin(), merged_graph.edges().end());
    cur = std::move(next);
  }
  return best_side;
}

}  // namespace

ApproxResult approx_min_cut(const WeightedGraph& g, double epsilon) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("minimum cut needs at least two vertices");
  if (!g.is_connected()) throw InputError("graph is disconnected");
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  ApproxResult r;

  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.edge(a).w > g.edge(b).w; });
  detail::DisjointSets sets(n + 1);
  r.w_star = INT64_MAX;
  for (int id : order) {
    if (sets.unite(g.edge(id).u, g.edge(id).v)) r.w_star = std::min(r.w_star, g.edge(id).w);
  }

  const Wide n2 = static_cast<Wide>(n) * n;
  const Wide bound = n2 * r.w_star;
  const Weight threshold = bound >= g.total_weight() ? g.total_weight() : static_cast<Weight>(bound);
  Contraction c = contract_heavy_edges(g, threshold);

  Working w;
  w.n = c.graph.vertex_count();
  w.members.resize(w.n + 1);
  for (int v = 1; v <= w.n; ++v) w.members[v] = {v};
  const Wide n3 = n2 * n;
  r.scaled = static_cast<Wide>(r.w_star) > n3;
  for (const Edge& e : c.graph.edges()) {
    if (!r.scaled) {
      w.edges.push_back(e);
      continue;
    }
    const Weight s = static_cast<Weight>(static_cast<Wide>(e.w) * n3 / r.w_star);
    if (s > 0) w.edges.push_back({e.u, e.v, s});
  }

  std::vector<int> contracted_side;
  if (w.n < 2) {
    throw std::logic_error("approx_min_cut: contraction above n^2 w* left a single vertex");
  }
  contracted_side = matula(std::move(w), epsilon, &r.rounds);
  r.side = expand_cut(c.mapping, contracted_side);
  r.estimate = cut_weight(g, r.side);
  return r;
}

std::int64_t Multigraph::total_multiplicity() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), std::int64_t{0});
}

std::vector<std::int64_t> draw_edges(const WeightedGraph& g, std::int64_t draws,
                                     std::uint64_t seed) {
  if (g.total_weight() <= 0) throw InputError("cannot sample from a graph of zero total weight");
  std::vector<Weight> prefix(g.edge_count());
  Weight acc = 0;
  for (int i = 0; i < g.edge_count(); ++i) prefix[i] = acc += g.edge(i).w;
  auto rng = make_rng(seed, 2);
  std::uniform_int_distribution<Weight> dist(0, g.total_weight() - 1);
  std::vector<std::int64_t> count(g.edge_count(), 0);
  for (std::int64_t k = 0; k < draws; ++k) {
    const Weight x = dist(rng);
    ++count[std::upper_bound(prefix.begin(), prefix.end(), x) - prefix.begin()];
  }
  return count;
}

Multigraph sample_multigraph(const WeightedGraph& g, Weight estimate, std::uint64_t seed,
                             const SamplingConstants& constants) {
  if (estimate < 1) throw InputError("minimum cut estimate must be >= 1");
  if (g.total_weight() <= 0) throw InputError("cannot sample from a graph of zero total weight");
  const int n = g.vertex_count();
  const long double p =
      std::min(1.0L, static_cast<long double>(constants.k) * std::log(static_cast<long double>(n)) /
                         static_cast<long double>(estimate));
  Multigraph h;
  h.n = n;
  std::vector<std::int64_t> count(g.edge_count());
  if (p >= 1.0L) {
    h.exact = true;
    h.cap = estimate;
    for (int i = 0; i < g.edge_count(); ++i) count[i] = g.edge(i).w;
  } else {
    const auto draws = static_cast<std::int64_t>(std::ceil(p * static_cast<long double>(g.total_weight())));
    count = draw_edges(g, draws, seed);
    h.cap = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil(constants.cap_factor * p * static_cast<long double>(estimate))));
  }
  detail::DisjointSets sets(n + 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (count[i] == 0) continue;
    const Edge& e = g.edge(i);
    h.edges.push_back({e.u, e.v, 0});
    h.source_edge.push_back(i);
    h.multiplicity.push_back(std::min(count[i], h.cap));
    sets.unite(e.u, e.v);
  }
  // A sample that misses a cut entirely cannot carry spanning trees.
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.edge(a).w > g.edge(b).w; });
  for (int i : order) {
    const Edge& e = g.edge(i);
    if (sets.unite(e.u, e.v)) {
      h.edges.push_back({e.u, e.v, 0});
      h.source_edge.push_back(i);
      h.multiplicity.push_back(1);
    }
  }
  for (std::size_t i = 0; i < h.edges.size(); ++i) h.edges[i].w = h.multiplicity[i];
  return h;
}

std::int64_t TreePacking::max_load(const Multigraph& h) const {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    const std::int64_t mu = h.multiplicity[i];
    best = std::max(best, (picks[i] + mu - 1) / mu);
  }
  return best;
}

namespace {

struct TreeHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

TreePacking pack_trees(const Multigraph& h) {
  const int n = h.n;
  const int m = static_cast<int>(h.edges.size());
  if (n < 2) throw InputError("packing needs at least two vertices");
  {
    detail::DisjointSets sets(n + 1);
    int joined = 0;
    for (const Edge& e : h.edges) joined += sets.unite(e.u, e.v);
    if (joined != n - 1) throw InputError("multigraph is disconnected");
  }
  TreePacking p;
  p.n = n;
  p.total_multiplicity = h.total_multiplicity();
  p.threshold = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(96.0L * std::log(static_cast<long double>(p.total_multiplicity)))));
  p.picks.assign(m, 0);

  // Edges kept sorted by key = picks / multiplicity (load of the least
  // loaded copy); keys only ever grow by one, so a merge restores order.
  std::vector<std::int64_t> key(m, 0);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<char> changed(m, 0);
  std::vector<int> stay, moved;
  std::unordered_map<std::vector<int>, int, TreeHash> index;
  std::vector<int> tree;
  bool full = false;
  while (!full) {
    detail::DisjointSets sets(n + 1);
    tree.clear();
    for (int e : order) {
      if (sets.unite(h.edges[e].u, h.edges[e].v)) {
        tree.push_back(e);
        if (static_cast<int>(tree.size()) == n - 1) break;
      }
    }
    ++p.iterations;
    bool any_changed = false;
    for (int e : tree) {
      const std::int64_t mu = h.multiplicity[e];
      ++p.picks[e];
      if (p.picks[e] / mu != key[e]) {
        key[e] = p.picks[e] / mu;
        changed[e] = 1;
        any_changed = true;
      }
      if ((p.picks[e] + mu - 1) / mu >= p.threshold) full = true;
    }
    std::sort(tree.begin(), tree.end());
    auto [it, inserted] = index.try_emplace(tree, static_cast<int>(p.trees.size()));
    if (inserted) {
      p.trees.push_back(tree);
      p.weight.push_back(0);
    }
    ++p.weight[it->second];
    if (!any_changed) continue;
    stay.clear();
    moved.clear();
    for (int e : order) (changed[e] ? moved : stay).push_back(e);
    for (int e : moved) changed[e] = 0;
    std::merge(stay.begin(), stay.end(), moved.begin(), moved.end(), order.begin(),
               [&](int a, int b) { return key[a] < key[b]; });
  }
  return p;
}

std::vector<int> sample_trees(const TreePacking& p, int k, std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("tree count must be non-negative");
  if (k == 0) return {};
  if (p.trees.empty()) throw std::invalid_argument("cannot sample from an empty packing");
  std::vector<std::int64_t> prefix(p.weight.size());
  std::partial_sum(p.weight.begin(), p.weight.end(), prefix.begin());
  auto rng = make_rng(seed, 3);
  std::uniform_int_distribution<std::int64_t> dist(0, prefix.back() - 1);
  std::vector<int> out(k);
  for (int& t : out) {
    t = static_cast<int>(std::upper_bound(prefix.begin(), prefix.end(), dist(rng)) - prefix.begin());
  }
  return out;
}

}  // namespace mincut
