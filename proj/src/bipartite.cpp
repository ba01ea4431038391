#include "mincut/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace mincut {

namespace {

constexpr int kPlain = 0;
constexpr int kMod = 1;

struct LocalCross {
  int a;  // t1 node
  int b;  // node of the fragment's t2 tree
  Cost cost;
};

struct Best {
  Cost value = Cost::none();
  int node = -1;
};

class Solver {
 public:
  Solver(const BipartiteProblem& p, BipartiteSolution& out, BipartiteStats* stats,
         OpCounter* counter)
      : p_(p), out_(out), stats_(stats), counter_(counter) {}

  void run() {
    std::vector<std::int64_t> load(p_.t1.size(), 0);
    for (const CrossEdge& c : p_.cross) ++load[c.a];
    hld_ = heavy_decompose(p_.t1, load);

    CostLayer plain{p_.c2, {}};
    plain.witness.resize(p_.t2.size());
    for (int v = 0; v < p_.t2.size(); ++v) plain.witness[v] = v;
    const CostLayer layers[2] = {plain, plain};
    std::vector<int> lambda{0};
    for (const CrossEdge& c : p_.cross) lambda.push_back(c.b);
    std::sort(lambda.begin(), lambda.end());
    InducedTree t2 = induce_plain(p_.t2, layers, lambda, counter_);
    std::vector<LocalCross> cross;
    cross.reserve(p_.cross.size());
    for (const CrossEdge& c : p_.cross) cross.push_back({c.a, t2.node_of(c.b), c.cost});

    const int top = hld_.path_of[0];
    solve(top, 0, static_cast<int>(hld_.paths[top].size()) - 1, t2, std::move(cross), 1);
  }

 private:
  void record(int e, Cost value, int partner) {
    out_.best[e] = value;
    out_.partner[e] = partner;
  }

  std::vector<int> light_children(int u) const {
    std::vector<int> out;
    for (int c : p_.t1.children(u)) {
      if (c != hld_.heavy_child[u]) out.push_back(c);
    }
    return out;
  }

  // Sum of marked cross costs below every node of t2.
  std::vector<Cost> accumulate(const InducedTree& t2, std::span<const LocalCross> marked) {
    std::vector<Cost> acc(t2.size());
    for (const LocalCross& c : marked) acc[c.b] += c.cost;
    for (int v = t2.size() - 1; v > 0; --v) acc[t2.topo.parent(v)] += acc[v];
    if (counter_) counter_->bipartite_work += t2.size() + marked.size();
    return acc;
  }

  // Best t2 edge for a t1 edge whose subtree holds exactly the marked cross edges.
  Best propagate(const InducedTree& t2, int layer, std::span<const LocalCross> marked) {
    std::vector<Cost> acc = accumulate(t2, marked);
    const CostLayer& l = t2.layers[layer];
    Best b;
    for (int v = 1; v < t2.size(); ++v) {
      const Cost c = l.cost[v] + acc[v];
      if (b.node < 0 || c < b.value) b = {c, v};
    }
    return b;
  }

  Best layer_min(const InducedTree& t2, int layer) { return propagate(t2, layer, {}); }

  InducedTree child_tree(const InducedTree& t2, std::vector<CostLayer> layers,
                         std::vector<LocalCross>& cross) {
    std::vector<char> mark(t2.size(), 0);
    mark[0] = 1;
    for (const LocalCross& c : cross) mark[c.b] = 1;
    std::vector<int> lambda;
    for (int v = 0; v < t2.size(); ++v) {
      if (mark[v]) lambda.push_back(v);
    }
    InducedTree child = induce_plain(t2.topo, layers, lambda, counter_);
    for (LocalCross& c : cross) c.b = child.node_of(c.b);
    return child;
  }

  void base(int path, int i0, int i1, const InducedTree& t2) {
    const auto& nodes = hld_.paths[path];
    const Best mod = layer_min(t2, kMod);
    const Best plain = layer_min(t2, kPlain);
    const int mod_partner = t2.layers[kMod].witness[mod.node];
    const int plain_partner = t2.layers[kPlain].witness[plain.node];
    for (int j = i0 + 1; j <= i1; ++j) record(nodes[j], p_.c1[nodes[j]] + mod.value, mod_partner);
    for (int j = i0; j <= i1; ++j) {
      for (int c : light_children(nodes[j])) {
        for (int v = c; v < p_.t1.subtree_end(c); ++v) {
          record(v, p_.c1[v] + plain.value, plain_partner);
        }
        if (counter_) counter_->bipartite_work += p_.t1.subtree_size(c);
      }
    }
  }

  void boundary(int e, const InducedTree& t2, int layer, std::span<const LocalCross> marked) {
    Best b = propagate(t2, layer, marked);
    record(e, p_.c1[e] + b.value, t2.layers[layer].witness[b.node]);
  }

  // Fragment: positions i0..i1 of a heavy path plus the light subtrees
  // hanging off them. Layer kMod of t2 already includes every cross edge
  // whose t1 endpoint lies below the fragment.
  void solve(int path, int i0, int i1, const InducedTree& t2, std::vector<LocalCross> cross,
             int depth) {
    if (stats_) {
      stats_->max_depth = std::max(stats_->max_depth, depth);
      ++stats_->fragments;
    }
    if (counter_) counter_->bipartite_work += t2.size() + cross.size() + 1;
    if (t2.size() < 2) return;
    if (cross.empty()) {
      base(path, i0, i1, t2);
      return;
    }
    const auto& nodes = hld_.paths[path];
    const auto& nonzero = hld_.nonzero_light[path];
    const std::int64_t total = static_cast<std::int64_t>(cross.size());
    auto it = std::lower_bound(nonzero.begin(), nonzero.end(), i0);
    std::int64_t acc = 0;
    int i = -1;
    for (; it != nonzero.end() && *it <= i1; ++it) {
      acc += hld_.light_size[nodes[*it]];
      if (2 * acc > total) {
        i = *it;
        break;
      }
    }
    if (i < 0) throw std::logic_error("bipartite: light sizes do not cover the fragment");
    const int u = nodes[i];
    const int end_u = p_.t1.subtree_end(u);
    const std::vector<int> light = light_children(u);

    std::vector<LocalCross> upper, own, lower;
    std::vector<std::vector<LocalCross>> light_cross(light.size());
    for (const LocalCross& c : cross) {
      if (c.a < u || c.a >= end_u) {
        upper.push_back(c);
      } else if (c.a == u) {
        own.push_back(c);
      } else {
        bool placed = false;
        for (std::size_t k = 0; k < light.size() && !placed; ++k) {
          if (p_.t1.is_ancestor(light[k], c.a)) {
            light_cross[k].push_back(c);
            placed = true;
          }
        }
        if (!placed) lower.push_back(c);
      }
    }
    std::vector<LocalCross> at_or_below = own;
    for (const auto& lc : light_cross) at_or_below.insert(at_or_below.end(), lc.begin(), lc.end());
    at_or_below.insert(at_or_below.end(), lower.begin(), lower.end());

    for (std::size_t k = 0; k < light.size(); ++k) boundary(light[k], t2, kPlain, light_cross[k]);
    if (i > i0) boundary(u, t2, kMod, at_or_below);
    if (i < i1) boundary(nodes[i + 1], t2, kMod, lower);

    const CostLayer& plain = t2.layers[kPlain];
    for (std::size_t k = 0; k < light.size(); ++k) {
      InducedTree child = child_tree(t2, {plain, plain}, light_cross[k]);
      const int lp = hld_.path_of[light[k]];
      solve(lp, 0, static_cast<int>(hld_.paths[lp].size()) - 1, child, std::move(light_cross[k]),
            depth + 1);
    }
    if (i > i0) {
      std::vector<Cost> acc = accumulate(t2, at_or_below);
      CostLayer mod = t2.layers[kMod];
      for (int v = 0; v < t2.size(); ++v) mod.cost[v] += acc[v];
      InducedTree child = child_tree(t2, {plain, std::move(mod)}, upper);
      solve(path, i0, i - 1, child, std::move(upper), depth + 1);
    }
    if (i < i1) {
      InducedTree child = child_tree(t2, {plain, t2.layers[kMod]}, lower);
      solve(path, i + 1, i1, child, std::move(lower), depth + 1);
    }
  }

  const BipartiteProblem& p_;
  BipartiteSolution& out_;
  BipartiteStats* stats_;
  OpCounter* counter_;
  HeavyPathDecomposition hld_;
};

void validate(const BipartiteProblem& p) {
  if (static_cast<int>(p.c1.size()) != p.t1.size() || static_cast<int>(p.c2.size()) != p.t2.size()) {
    throw std::invalid_argument("bipartite: one cost per tree node required");
  }
  for (const CrossEdge& c : p.cross) {
    if (c.a < 0 || c.a >= p.t1.size() || c.b < 0 || c.b >= p.t2.size()) {
      throw std::invalid_argument("bipartite: cross edge endpoint outside its tree");
    }
  }
}

void pick_global(BipartiteSolution& s) {
  for (int e = 1; e < static_cast<int>(s.best.size()); ++e) {
    if (s.partner[e] >= 0 && (s.e1 < 0 || s.best[e] < s.value)) {
      s.value = s.best[e];
      s.e1 = e;
      s.e2 = s.partner[e];
    }
  }
}

}  // namespace

BipartiteSolution solve_bipartite(const BipartiteProblem& p, BipartiteStats* stats,
                                  OpCounter* counter) {
  validate(p);
  BipartiteSolution s;
  s.best.assign(p.t1.size(), Cost::none());
  s.partner.assign(p.t1.size(), -1);
  if (p.t1.size() < 2 || p.t2.size() < 2) return s;
  Solver(p, s, stats, counter).run();
  pick_global(s);
  return s;
}

BipartiteSolution brute_force_bipartite(const BipartiteProblem& p) {
  validate(p);
  BipartiteSolution s;
  s.best.assign(p.t1.size(), Cost::none());
  s.partner.assign(p.t1.size(), -1);
  for (int e1 = 1; e1 < p.t1.size(); ++e1) {
    for (int e2 = 1; e2 < p.t2.size(); ++e2) {
      Cost v = p.c1[e1] + p.c2[e2];
      for (const CrossEdge& c : p.cross) {
        if (p.t1.is_ancestor(e1, c.a) && p.t2.is_ancestor(e2, c.b)) v += c.cost;
      }
      if (s.partner[e1] < 0 || v < s.best[e1]) {
        s.best[e1] = v;
        s.partner[e1] = e2;
      }
    }
  }
  pick_global(s);
  return s;
}

std::vector<ReducedProblem> build_bipartite_problems(const WeightedGraph& g,
                                                     const RootedBinaryTree& t,
                                                     const RespectScores& scores,
                                                     ScoreTree& crossing, OpCounter* counter) {
  std::vector<ReducedProblem> out;
  for (int w = 0; w < t.size(); ++w) {
    auto ch = t.topo.children(w);
    if (ch.size() != 2) continue;
    const int x = ch[0];
    const int y = ch[1];
    std::vector<std::pair<int, int>> pairs;  // (node below x, node below y)
    std::vector<Weight> weights;
    for (int id : scores.lca_list[w]) {
      const Edge& e = g.edge(id);
      int a = t.node_of[e.u];
      int b = t.node_of[e.v];
      if (a == w || b == w) continue;
      if (!t.topo.is_ancestor(x, a)) std::swap(a, b);
      pairs.emplace_back(a, b);
      weights.push_back(e.w);
    }
    std::vector<int> lam1{w, x};
    std::vector<int> lam2{w, y};
    for (auto [a, b] : pairs) {
      lam1.push_back(a);
      lam2.push_back(b);
    }
    std::sort(lam1.begin() + 2, lam1.end());
    std::sort(lam2.begin() + 2, lam2.end());
    InducedTree t1 = build_induced(crossing, t.lca, lam1, Scope{w, x}, InduceStrategy::kAuto, counter);
    InducedTree t2 = build_induced(crossing, t.lca, lam2, Scope{w, y}, InduceStrategy::kAuto, counter);

    ReducedProblem r;
    r.branch = w;
    r.problem.cross.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      r.problem.cross.push_back(
          {t1.node_of(pairs[k].first), t2.node_of(pairs[k].second), Cost::finite(-2 * weights[k])});
    }
    r.problem.c1 = t1.cost();
    r.witness1 = t1.witness();
    r.problem.t1 = std::move(t1.topo);
    r.problem.c2 = t2.cost();
    r.witness2 = t2.witness();
    r.problem.t2 = std::move(t2.topo);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<CutResult> min_2respect_independent(const WeightedGraph& g, const RootedBinaryTree& t,
                                                  const RespectScores& scores, OpCounter* counter,
                                                  BipartiteStats* stats) {
  ScoreTree crossing = crossing_score_tree(g, t);
  std::vector<ReducedProblem> problems = build_bipartite_problems(g, t, scores, crossing, counter);
  if (counter) counter->score_ops += crossing.op_count();
  Cost best = Cost::none();
  int e1 = -1;
  int e2 = -1;
  for (const ReducedProblem& r : problems) {
    BipartiteSolution s = solve_bipartite(r.problem, stats, counter);
    if (s.e1 >= 0 && s.value.is_finite() && s.value < best) {
      best = s.value;
      e1 = r.witness1[s.e1];
      e2 = r.witness2[s.e2];
    }
  }
  if (e1 < 0) return std::nullopt;
  return tree_cut(g, t, e1, e2, best.fin);
}

}  // namespace mincut
