#include "mincut/respect_basic.hpp"

#include <algorithm>

namespace mincut {

namespace {

Cost base_cost(const RootedBinaryTree& t, int node) {
  return t.is_original_edge(node) ? Cost{} : Cost::infinity();
}

std::pair<int, int> endpoints(const WeightedGraph& g, const RootedBinaryTree& t, int node) {
  const Edge& e = g.edge(t.graph_edge[node]);
  return {e.u, e.v};
}

}  // namespace

RespectScores compute_A(const WeightedGraph& g, const RootedBinaryTree& t) {
  const int size = t.size();
  RespectScores s;
  s.lca_list.assign(size, {});
  std::vector<Weight> delta(size, 0);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const int u = t.node_of[e.u];
    const int v = t.node_of[e.v];
    const int x = t.lca.lca(u, v);
    delta[u] += e.w;
    delta[v] += e.w;
    delta[x] -= 2 * e.w;
    s.lca_list[x].push_back(id);
  }
  for (int v = size - 1; v > 0; --v) delta[t.topo.parent(v)] += delta[v];
  s.a.resize(size);
  for (int v = 0; v < size; ++v) s.a[v] = base_cost(t, v) + Cost::finite(delta[v]);
  s.a[0] = Cost::none();
  return s;
}

ScoreTree crossing_score_tree(const WeightedGraph& g, const RootedBinaryTree& t) {
  std::vector<Cost> init(t.size());
  for (int v = 0; v < t.size(); ++v) init[v] = base_cost(t, v);
  ScoreTree st(t.topo, init);
  for (const Edge& e : g.edges()) {
    const int u = t.node_of[e.u];
    const int v = t.node_of[e.v];
    st.add(u, Cost::finite(e.w));
    st.add(v, Cost::finite(e.w));
    st.add(t.lca.lca(u, v), Cost::finite(-2 * e.w));
  }
  return st;
}

CutResult tree_cut(const WeightedGraph& g, const RootedBinaryTree& t, int e1, int e2, Weight weight) {
  CutResult r;
  r.weight = weight;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int node = t.node_of[v];
    const bool below1 = t.topo.is_ancestor(e1, node);
    const bool below2 = e2 >= 0 && t.topo.is_ancestor(e2, node);
    if (below1 != below2) r.side.push_back(v);
  }
  r.provenance.kind = e2 < 0 ? Provenance::Kind::kOneRespecting : Provenance::Kind::kTwoRespecting;
  r.provenance.first = endpoints(g, t, e1);
  if (e2 >= 0) r.provenance.second = endpoints(g, t, e2);
  return r;
}

CutResult min_1respect(const WeightedGraph& g, const RootedBinaryTree& t,
                       const RespectScores& scores) {
  int best = -1;
  for (int v = 1; v < t.size(); ++v) {
    if (!t.is_original_edge(v)) continue;
    if (best < 0 || scores.a[v] < scores.a[best]) best = v;
  }
  if (best < 0) throw InputError("graph has a single vertex and no cut");
  return tree_cut(g, t, best, -1, scores.a[best].fin);
}

std::optional<CutResult> min_2respect_descendant(const WeightedGraph& g, const RootedBinaryTree& t,
                                                 const RespectScores& scores,
                                                 const DescendantObserver& observer,
                                                 OpCounter* counter) {
  ScoreTree st = crossing_score_tree(g, t);
  Cost best = Cost::none();
  int best_e = -1;
  int best_f = -1;
  // Node ids are a preorder, so increasing id is the order of first visits.
  for (int x = 0; x < t.size(); ++x) {
    if (x > 0 && t.is_original_edge(x) && !t.topo.is_leaf(x)) {
      if (observer) observer(x, scores.a[x], st);
      EdgeMin m = st.subtree_min(x);
      const Cost cand = scores.a[x] + m.cost;
      if (cand.is_finite() && cand < best) {
        best = cand;
        best_e = x;
        best_f = m.edge;
      }
    }
    for (int id : scores.lca_list[x]) {
      const Edge& e = g.edge(id);
      st.add(t.node_of[e.u], Cost::finite(-2 * e.w));
      st.add(t.node_of[e.v], Cost::finite(-2 * e.w));
      st.add(x, Cost::finite(4 * e.w));
    }
  }
  if (counter) counter->score_ops += st.op_count();
  if (best_e < 0) return std::nullopt;
  return tree_cut(g, t, best_e, best_f, best.fin);
}

}  // namespace mincut
