#include "mincut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

// Deliberately self-contained: nothing here goes through the tree, score or
// cut helpers used by the solvers.

namespace mincut::oracle {

namespace {

Weight side_weight(const WeightedGraph& g, const std::vector<char>& in) {
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) total += e.w;
  }
  return total;
}

CutResult make_result(const std::vector<char>& in, Weight weight) {
  CutResult r;
  r.weight = weight;
  for (int v = 1; v < static_cast<int>(in.size()); ++v) {
    if (in[v]) r.side.push_back(v);
  }
  r.provenance.kind = Provenance::Kind::kOracle;
  return r;
}

}  // namespace

CutResult exhaustive_min_cut(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("exhaustive oracle needs at least two vertices");
  if (n > kMaxExhaustiveVertices) {
    throw InputError("exhaustive oracle limited to " + std::to_string(kMaxExhaustiveVertices) +
                     " vertices, got " + std::to_string(n));
  }
  // Gray-code walk over subsets of {2..n}; each step flips one vertex.
  std::vector<char> in(n + 1, 0);
  Weight current = 0;
  Weight best = std::numeric_limits<Weight>::max();
  std::uint32_t best_code = 0;
  const std::uint32_t count = std::uint32_t{1} << (n - 1);
  for (std::uint32_t i = 1; i < count; ++i) {
    const int bit = std::countr_zero(i);
    const int v = bit + 2;
    for (const auto& inc : g.incident(v)) {
      const Weight w = g.edge(inc.edge).w;
      current += in[inc.neighbor] == in[v] ? w : -w;
    }
    in[v] ^= 1;
    if (current < best) {
      best = current;
      best_code = i ^ (i >> 1);
    }
  }
  std::vector<char> side(n + 1, 0);
  for (int b = 0; b < n - 1; ++b) side[b + 2] = (best_code >> b) & 1;
  return make_result(side, best);
}

CutResult stoer_wagner(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("Stoer-Wagner needs at least two vertices");
  if (!g.is_connected()) throw InputError("graph is disconnected");
  std::vector<std::vector<Weight>> adj(n, std::vector<Weight>(n, 0));
  for (const Edge& e : g.edges()) {
    adj[e.u - 1][e.v - 1] += e.w;
    adj[e.v - 1][e.u - 1] += e.w;
  }
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[v] = {v + 1};
  std::vector<char> merged(n, 0);
  Weight best = std::numeric_limits<Weight>::max();
  std::vector<int> best_side;

  for (int phase = n; phase > 1; --phase) {
    std::vector<Weight> key(n, 0);
    std::vector<char> added(n, 0);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < phase; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (!merged[v] && !added[v] && (pick < 0 || key[v] > key[pick])) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int v = 0; v < n; ++v) {
        if (!merged[v] && !added[v]) key[v] += adj[pick][v];
      }
    }
    if (key[last] < best) {
      best = key[last];
      best_side = members[last];
    }
    for (int v = 0; v < n; ++v) {
      adj[prev][v] += adj[last][v];
      adj[v][prev] = adj[prev][v];
    }
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    merged[last] = 1;
  }
  std::vector<char> in(n + 1, 0);
  for (int v : best_side) in[v] = 1;
  return make_result(in, best);
}

CutResult brute_2respect(const WeightedGraph& g, std::span<const int> tree_edges) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("need at least two vertices");
  if (static_cast<int>(tree_edges.size()) != n - 1) throw InputError("tree has wrong edge count");
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
  for (int id : tree_edges) {
    if (id < 0 || id >= g.edge_count()) throw InputError("tree edge not in graph");
    const Edge& e = g.edge(id);
    adj[e.u].emplace_back(e.v, id);
    adj[e.v].emplace_back(e.u, id);
  }
  // Root at vertex 1; below[k][v] says whether v hangs below tree edge k.
  std::vector<int> parent(n + 1, 0), parent_edge(n + 1, -1), order;
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto [w, id] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      parent_edge[w] = id;
      stack.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) throw InputError("tree edges do not span the graph");

  std::vector<int> lower;  // lower vertex of each tree edge
  for (int v = 2; v <= n; ++v) lower.push_back(v);
  const int k = static_cast<int>(lower.size());
  std::vector<std::vector<char>> below(k, std::vector<char>(n + 1, 0));
  for (int i = 0; i < k; ++i) {
    for (int v = 1; v <= n; ++v) {
      for (int x = v; x != 0; x = parent[x]) {
        if (x == lower[i]) {
          below[i][v] = 1;
          break;
        }
      }
    }
  }
  auto endpoints = [&](int i) {
    const Edge& e = g.edge(parent_edge[lower[i]]);
    return std::pair<int, int>{e.u, e.v};
  };

  Weight best = std::numeric_limits<Weight>::max();
  std::vector<char> best_side;
  Provenance best_prov;
  std::vector<char> in(n + 1, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      bool proper = false;
      for (int v = 1; v <= n; ++v) {
        in[v] = j == i ? below[i][v] : static_cast<char>(below[i][v] != below[j][v]);
        proper |= in[v] != 0;
      }
      if (!proper) continue;
      const Weight w = side_weight(g, in);
      if (w < best) {
        best = w;
        best_side = in;
        best_prov = {};
        best_prov.kind = j == i ? Provenance::Kind::kOneRespecting : Provenance::Kind::kTwoRespecting;
        best_prov.first = endpoints(i);
        if (j != i) best_prov.second = endpoints(j);
      }
    }
  }
  CutResult r = make_result(best_side, best);
  r.provenance = best_prov;
  return r;
}

}  // namespace mincut::oracle
