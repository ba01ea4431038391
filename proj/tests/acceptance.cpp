// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "mincut/bipartite.hpp"
#include "mincut/generators.hpp"
#include "mincut/induced_tree.hpp"
#include "mincut/oracle.hpp"
#include "mincut/packing.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/respect2.hpp"
#include "support.hpp"

using namespace mincut;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random connected graph with n vertices and weights in [1, wmax].
WeightedGraph random_connected(std::mt19937_64& rng, int n, Weight wmax) {
  if (rng() % 2 == 0) {
    const double p = std::min(1.0, (2.0 + static_cast<double>(rng() % 6)) / std::max(1, n - 1));
    return gen::gnp(n, p, {1, wmax}, rng());
  }
  return gen::tree_plus(n, uniform(rng, 0, 2 * n), {1, wmax}, rng());
}

std::vector<int> below_one(const RootedBinaryTree& t, int x, int y) {
  std::vector<int> side;
  for (int v = 1; v < static_cast<int>(t.node_of.size()); ++v) {
    const int node = t.node_of[v];
    if (t.topo.is_ancestor(x, node) != t.topo.is_ancestor(y, node)) side.push_back(v);
  }
  return side;
}

Outcome criterion1() {
  int bad = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    WeightedGraph g = random_connected(rng, uniform(rng, 4, 60), 20);
    std::vector<int> tree = gen::random_spanning_tree(g, rng());
    CutResult fast = min_2respect(g, tree);
    CutResult brute = oracle::brute_2respect(g, tree);
    bad += fast.weight != brute.weight || cut_weight(g, fast.side) != fast.weight;
  }
  return {bad == 0, std::to_string(500 - bad) + "/500 instances equal brute force"};
}

Outcome criterion2() {
  std::uint64_t pairs = 0;
  std::uint64_t bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(2000 + seed);
    WeightedGraph g = random_connected(rng, uniform(rng, 2, 40), 20);
    RootedBinaryTree t = build_spanning_tree_view(g, gen::random_spanning_tree(g, rng()));
    RespectScores scores = compute_A(g, t);
    auto observer = [&](int x, Cost a, ScoreTree& st) {
      for (int q = x + 1; q < t.topo.subtree_end(x); ++q) {
        if (!t.is_original_edge(q)) continue;
        ++pairs;
        bad += a + st.edge_cost(q) != Cost::finite(cut_weight(g, below_one(t, x, q)));
      }
    };
    min_2respect_descendant(g, t, scores, observer);
  }
  return {bad == 0 && pairs > 0,
          std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " comparable pairs match"};
}

// Induced-tree check against grouping source edges by the Lambda nodes below them.
bool induced_matches(const StaticTree& t, const std::vector<Cost>& cost, std::vector<int> lam,
                     const InducedTree& got) {
  lam.erase(std::unique(lam.begin(), lam.end()), lam.end());
  if (got.size() > 2 * static_cast<int>(lam.size()) + 2) return false;
  std::map<std::vector<int>, Cost> groups;
  for (int v = 1; v < t.size(); ++v) {
    std::vector<int> s;
    for (int x : lam) {
      if (t.is_ancestor(v, x)) s.push_back(x);
    }
    auto it = groups.find(s);
    if (it == groups.end()) {
      groups.emplace(s, cost[v]);
    } else {
      it->second = std::min(it->second, cost[v]);
    }
  }
  std::size_t edges = 0;
  for (int x = 0; x < got.size(); ++x) {
    if (x == got.source_root || got.origin[x] == kSynthetic) continue;
    std::vector<int> s;
    for (int y : lam) {
      if (t.is_ancestor(got.origin[x], y)) s.push_back(y);
    }
    auto it = groups.find(s);
    if (it == groups.end() || it->second != got.cost()[x]) return false;
    ++edges;
  }
  auto empty = groups.find({});
  if ((empty != groups.end()) != (got.empty_edge >= 0)) return false;
  if (empty != groups.end() && got.cost()[got.empty_edge] != empty->second) return false;
  return edges + (got.empty_edge >= 0 ? 1 : 0) == groups.size();
}

Outcome criterion3() {
  int bad = 0;
  int max_excess = -1000;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(3000 + seed);
    const int n = uniform(rng, 2, 60);
    StaticTree t = testing::random_tree(n, rng, seed % 2 == 0);
    LcaIndex lca(t);
    std::vector<Cost> cost(n);
    for (auto& c : cost) c = Cost::finite(uniform(rng, -10, 30));
    cost[0] = Cost::none();
    ScoreTree source(t, cost);
    std::vector<int> lam(uniform(rng, 1, 10));
    for (int& x : lam) x = uniform(rng, 0, n - 1);
    std::sort(lam.begin(), lam.end());

    bool ok = true;
    for (auto strategy : {InduceStrategy::kSweep, InduceStrategy::kScan}) {
      InducedTree got = build_induced(source, lca, lam, {}, strategy);
      ok &= induced_matches(t, cost, lam, got);
      max_excess = std::max(max_excess, got.size() - 2 * static_cast<int>(got.lambda.size()));
    }
    // Composition: inducing on a subset of Lambda through the induced tree.
    CostLayer layer{cost, {}};
    InducedTree first = induce_plain(t, std::span<const CostLayer>(&layer, 1), lam);
    std::vector<int> sub;
    for (int x : first.lambda) {
      if (rng() % 2 == 0) sub.push_back(x);
    }
    if (sub.empty()) sub.push_back(first.lambda.back());
    std::vector<int> inner;
    for (int x : sub) inner.push_back(first.node_of(x));
    std::sort(inner.begin(), inner.end());
    CostLayer mid{first.cost(), first.witness()};
    InducedTree second = induce_plain(first.topo, std::span<const CostLayer>(&mid, 1), inner);
    InducedTree direct = induce_plain(t, std::span<const CostLayer>(&layer, 1), sub);
    std::map<std::vector<int>, Cost> want;
    for (int x = 0; x < direct.size(); ++x) {
      if (x == direct.source_root || direct.origin[x] == kSynthetic) continue;
      std::vector<int> s;
      for (int y = x; y < direct.topo.subtree_end(x); ++y) {
        if (direct.in_lambda[y]) s.push_back(direct.origin[y]);
      }
      want[s] = direct.cost()[x];
    }
    for (int x = 0; x < second.size(); ++x) {
      if (x == second.source_root || second.origin[x] == kSynthetic) continue;
      std::vector<int> s;
      for (int y = x; y < second.topo.subtree_end(x); ++y) {
        if (second.in_lambda[y]) s.push_back(first.origin[second.origin[y]]);
      }
      auto it = want.find(s);
      if (it == want.end()) {
        ok &= second.origin[x] == first.source_root && first.empty_edge >= 0;
      } else {
        ok &= it->second == second.cost()[x];
      }
    }
    if (direct.empty_edge >= 0) {
      ok &= second.empty_edge >= 0 &&
            second.cost()[second.empty_edge] == direct.cost()[direct.empty_edge];
    }
    bad += !ok;
  }
  return {bad == 0 && max_excess <= 2, std::to_string(300 - bad) +
                                           "/300 instances match; max |T^L| - 2|L| = " +
                                           std::to_string(max_excess)};
}

// Row minima of the bipartite objective, O(|t1| (|t2| + |cross|)).
std::vector<Cost> all_pairs_rows(const BipartiteProblem& p) {
  std::vector<Cost> rows(p.t1.size(), Cost::none());
  std::vector<Cost> below(p.t2.size());
  for (int e1 = 1; e1 < p.t1.size(); ++e1) {
    std::fill(below.begin(), below.end(), Cost{});
    for (const CrossEdge& c : p.cross) {
      if (p.t1.is_ancestor(e1, c.a)) below[c.b] += c.cost;
    }
    for (int v = p.t2.size() - 1; v > 0; --v) below[p.t2.parent(v)] += below[v];
    for (int e2 = 1; e2 < p.t2.size(); ++e2) {
      rows[e1] = std::min(rows[e1], p.c1[e1] + p.c2[e2] + below[e2]);
    }
  }
  return rows;
}

Outcome criterion4() {
  int bad = 0;
  int deep = 0;
  int worst_depth = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng(4000 + seed);
    BipartiteProblem p;
    const int total = uniform(rng, 4, 300);
    const int n1 = uniform(rng, 2, std::max(2, total / 3));
    const int n2 = uniform(rng, 2, std::max(2, total / 3));
    const int m = std::max(0, total - n1 - n2);
    p.t1 = testing::random_tree(n1, rng, rng() % 2 == 0);
    p.t2 = testing::random_tree(n2, rng, rng() % 2 == 0);
    p.c1.resize(n1);
    p.c2.resize(n2);
    for (auto& c : p.c1) c = Cost::finite(uniform(rng, 0, 40));
    for (auto& c : p.c2) c = Cost::finite(uniform(rng, 0, 40));
    for (int i = 0; i < m; ++i) {
      p.cross.push_back({uniform(rng, 0, n1 - 1), uniform(rng, 0, n2 - 1),
                         Cost::finite(uniform(rng, -12, 3))});
    }
    BipartiteStats stats;
    BipartiteSolution s = solve_bipartite(p, &stats);
    std::vector<Cost> rows = all_pairs_rows(p);
    const Cost best = *std::min_element(rows.begin() + 1, rows.end());
    bool ok = s.value == best;
    for (int e1 = 1; e1 < n1; ++e1) ok &= s.best[e1] == rows[e1];
    bad += !ok;
    worst_depth = std::max(worst_depth, stats.max_depth);
    deep += stats.max_depth > 2.0 * std::log2(static_cast<double>(p.size())) + 4.0;
  }
  return {bad == 0 && deep == 0, std::to_string(500 - bad) + "/500 problems equal brute force; " +
                                     std::to_string(deep) + " over depth bound (max depth " +
                                     std::to_string(worst_depth) + ")"};
}

Outcome criterion5() {
  int bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(5000 + seed);
    WeightedGraph g = random_connected(rng, uniform(rng, 2, 10), uniform(rng, 1, 6));
    Multigraph h;
    h.n = g.vertex_count();
    h.exact = true;
    for (int i = 0; i < g.edge_count(); ++i) {
      h.edges.push_back(g.edge(i));
      h.source_edge.push_back(i);
      h.multiplicity.push_back(g.edge(i).w);
      h.cap = std::max(h.cap, g.edge(i).w);
    }
    const std::int64_t c = oracle::exhaustive_min_cut(g).weight;
    TreePacking p = pack_trees(h);
    const std::int64_t threshold = static_cast<std::int64_t>(
        std::ceil(96.0 * std::log(static_cast<double>(h.total_multiplicity()))));
    bool ok = p.threshold == std::max<std::int64_t>(1, threshold);
    ok &= p.iterations <= c * p.threshold + 1;
    ok &= p.max_load(h) <= p.threshold;
    ok &= 8 * p.iterations >= 3 * c * p.threshold;
    bad += !ok;
  }
  return {bad == 0, std::to_string(100 - bad) + "/100 packings within bounds"};
}

struct EndToEnd {
  Outcome outcome;
  std::vector<std::pair<WeightedGraph, Weight>> checked;  // graph, oracle weight
};

EndToEnd criterion6() {
  EndToEnd out;
  const auto t0 = Clock::now();
  int below = 0;
  int equal = 0;
  int runs = 0;
  auto record = [&](const WeightedGraph& g, Weight oracle_weight, std::uint64_t seed) {
    PipelineConfig cfg;
    cfg.seed = seed;
    CutResult r = min_cut(g, cfg);
    below += r.weight < oracle_weight || cut_weight(g, r.side) != r.weight;
    equal += r.weight == oracle_weight;
    ++runs;
    out.checked.emplace_back(g, oracle_weight);
  };
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(6000 + seed);
    WeightedGraph g = random_connected(rng, uniform(rng, 2, 12), uniform(rng, 1, 50));
    record(g, oracle::exhaustive_min_cut(g).weight, seed);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(7000 + seed);
    WeightedGraph g = random_connected(rng, uniform(rng, 13, 300), uniform(rng, 1, 100));
    record(g, oracle::stoer_wagner(g).weight, 300 + seed);
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d runs equal the oracle, %d below it, %.1f s", equal, runs,
                below, elapsed);
  out.outcome = {below == 0 && equal * 100 >= runs * 99 && elapsed < 300.0, buf};
  return out;
}

Outcome criterion7(const std::vector<std::pair<WeightedGraph, Weight>>& checked) {
  int bad = 0;
  double worst = 0;
  auto check = [&](const WeightedGraph& g, Weight c) {
    ApproxResult a = approx_min_cut(g, 1.0);
    const long double ratio = static_cast<long double>(a.estimate) / static_cast<long double>(c);
    worst = std::max(worst, static_cast<double>(ratio));
    bad += ratio < 1.0L || ratio > 3.0L * (1.0L + 1.0L / g.vertex_count()) ||
           cut_weight(g, a.side) != a.estimate;
    return a.scaled;
  };
  for (const auto& [g, c] : checked) check(g, c);

  // Weights far above n^3 force the rescaling path.
  std::mt19937_64 rng(8000);
  int scaled = 0;
  for (int i = 0; i < 20; ++i) {
    WeightedGraph base = random_connected(rng, uniform(rng, 3, 12), 1);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    for (Edge& e : edges) e.w = 1000000 + static_cast<Weight>(rng() % 1000000000000);
    WeightedGraph g(base.vertex_count(), edges);
    scaled += check(g, oracle::exhaustive_min_cut(g).weight);
  }
  const int total = static_cast<int>(checked.size()) + 20;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d estimates in range, worst ratio %.3f, %d rescaled instances",
                total - bad, total, worst, scaled);
  return {bad == 0 && scaled > 0, buf};
}

Outcome criterion8() {
  double lo = 1e300;
  double hi = 0;
  std::string rows;
  for (int k = 12; k <= 18; ++k) {
    const double target = std::ldexp(1.0, k);
    const int n = static_cast<int>(2.0 * target / 16);
    const double p = 2.0 * target / (static_cast<double>(n) * (n - 1));
    WeightedGraph g = gen::gnp(n, p, {1, 100}, 9000 + k);
    std::vector<int> tree = gen::random_spanning_tree(g, 9000 + k);
    Respect2Stats stats;
    const auto t0 = Clock::now();
    min_2respect(g, tree, &stats);
    const double secs = seconds_since(t0);
    const double m = g.edge_count();
    const double ratio = static_cast<double>(stats.ops.total()) / (m * std::log2(m));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    char buf[96];
    std::snprintf(buf, sizeof buf, " m=%d:%.2f(%.2fs)", g.edge_count(), ratio, secs);
    rows += buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "ratio spread %.2f;", hi / lo);
  return {hi / lo < 3.0, buf + rows};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const Outcome& o, double secs) {
    std::printf("[%s] criterion %d: %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  };
  auto run = [&](int id, const char* name, const std::function<Outcome()>& f) {
    const auto t0 = Clock::now();
    Outcome o = f();
    report(id, name, o, seconds_since(t0));
  };

  run(1, "2-respecting exactness", criterion1);
  run(2, "descendant scores", criterion2);
  run(3, "induced trees", criterion3);
  run(4, "bipartite solver", criterion4);
  run(5, "tree packing", criterion5);
  auto t6 = Clock::now();
  EndToEnd e2e = criterion6();
  report(6, "end-to-end minimum cut", e2e.outcome, seconds_since(t6));
  run(7, "approximate minimum cut", [&] { return criterion7(e2e.checked); });
  run(8, "operation scaling", criterion8);
  return failed == 0 ? 0 : 1;
}
