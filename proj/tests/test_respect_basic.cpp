#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mincut/generators.hpp"
#include "mincut/respect_basic.hpp"
#include "support.hpp"

using namespace mincut;

namespace {

struct Instance {
  WeightedGraph g;
  RootedBinaryTree t;
};

Instance random_instance(std::mt19937_64& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng() % (max_n - 1));
  WeightedGraph g = testing::random_graph(n, rng, 12);
  RootedBinaryTree t = build_spanning_tree_view(g, gen::random_spanning_tree(g, rng()));
  return {std::move(g), std::move(t)};
}

std::vector<int> below_one(const RootedBinaryTree& t, int x, int y) {
  std::vector<int> side;
  for (int v = 1; v < static_cast<int>(t.node_of.size()); ++v) {
    const int node = t.node_of[v];
    if (t.topo.is_ancestor(x, node) != (y >= 0 && t.topo.is_ancestor(y, node))) side.push_back(v);
  }
  return side;
}

}  // namespace

TEST_CASE("triangle scores") {
  WeightedGraph g = testing::triangle();
  // Tree edges 1-2 (weight 1) and 2-3 (weight 2): a path rooted at vertex 1.
  RootedBinaryTree t = build_spanning_tree_view(g, std::vector<int>{0, 1});
  RespectScores s = compute_A(g, t);
  CHECK(s.a[t.node_of[2]] == Cost::finite(4));
  CHECK(s.a[t.node_of[3]] == Cost::finite(5));
  CHECK_FALSE(s.a[t.node_of[1]].is_finite());
  CutResult one = min_1respect(g, t, s);
  CHECK(one.weight == 4);
  CHECK(one.side == std::vector<int>{2, 3});
  std::optional<CutResult> two = min_2respect_descendant(g, t, s);
  REQUIRE(two);
  CHECK(two->weight == 3);
  CHECK(two->side == std::vector<int>{2});
  CHECK(two->provenance.kind == Provenance::Kind::kTwoRespecting);
}

TEST_CASE("star has no nested pairs") {
  WeightedGraph g = parse_graph_string("4 3\n1 2 1\n1 3 2\n1 4 3\n");
  RootedBinaryTree t = build_spanning_tree_view(g, std::vector<int>{0, 1, 2});
  RespectScores s = compute_A(g, t);
  CHECK_FALSE(min_2respect_descendant(g, t, s));
  CutResult one = min_1respect(g, t, s);
  CHECK(one.weight == 1);
  CHECK(one.side == std::vector<int>{2});
}

TEST_CASE("tree_cut side rule") {
  WeightedGraph g = parse_graph_string("4 3\n1 2 1\n2 3 1\n3 4 1\n");
  RootedBinaryTree t = build_spanning_tree_view(g, std::vector<int>{0, 1, 2});
  CHECK(tree_cut(g, t, t.node_of[2], -1, 1).side == std::vector<int>{2, 3, 4});
  CHECK(tree_cut(g, t, t.node_of[2], t.node_of[4], 2).side == std::vector<int>{2, 3});
  CHECK(tree_cut(g, t, t.node_of[4], t.node_of[2], 2).side == std::vector<int>{2, 3});
}

TEST_CASE("A is the crossing weight of every tree edge") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 200; ++round) {
    Instance in = random_instance(rng, 40);
    RespectScores s = compute_A(in.g, in.t);
    ScoreTree crossing = crossing_score_tree(in.g, in.t);
    std::vector<int> lca_seen(in.g.edge_count(), 0);
    for (int v = 0; v < in.t.size(); ++v) {
      for (int id : s.lca_list[v]) {
        ++lca_seen[id];
        const Edge& e = in.g.edge(id);
        CHECK(in.t.lca.lca(in.t.node_of[e.u], in.t.node_of[e.v]) == v);
      }
      if (v == 0) continue;
      if (in.t.is_original_edge(v)) {
        const Weight w = cut_weight(in.g, in.t.vertices_below(v));
        CHECK(s.a[v] == Cost::finite(w));
        CHECK(crossing.edge_cost(v) == Cost::finite(w));
      } else {
        CHECK_FALSE(s.a[v].is_finite());
        CHECK_FALSE(crossing.edge_cost(v).is_finite());
      }
    }
    for (int c : lca_seen) CHECK(c == 1);
  }
}

TEST_CASE("single edge minimum") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 200; ++round) {
    Instance in = random_instance(rng, 40);
    RespectScores s = compute_A(in.g, in.t);
    CutResult r = min_1respect(in.g, in.t, s);
    Weight best = INT64_MAX;
    for (int v = 1; v < in.t.size(); ++v) {
      if (in.t.is_original_edge(v)) best = std::min(best, cut_weight(in.g, in.t.vertices_below(v)));
    }
    CHECK(r.weight == best);
    CHECK(cut_weight(in.g, r.side) == best);
    CHECK(r.provenance.kind == Provenance::Kind::kOneRespecting);
  }
}

TEST_CASE("observer sees pair cut weight minus A") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 150; ++round) {
    Instance in = random_instance(rng, 30);
    RespectScores s = compute_A(in.g, in.t);
    int calls = 0;
    auto observer = [&](int x, Cost a, ScoreTree& scores) {
      ++calls;
      CHECK(in.t.is_original_edge(x));
      CHECK(a == s.a[x]);
      for (int q = x + 1; q < in.t.topo.subtree_end(x); ++q) {
        if (!in.t.is_original_edge(q)) continue;
        const Weight pair = cut_weight(in.g, below_one(in.t, x, q));
        CHECK(scores.edge_cost(q) == Cost::finite(pair) - a);
      }
    };
    min_2respect_descendant(in.g, in.t, s, observer);
    int originals_with_children = 0;
    for (int v = 1; v < in.t.size(); ++v) {
      originals_with_children += in.t.is_original_edge(v) && !in.t.topo.is_leaf(v);
    }
    CHECK(calls == originals_with_children);
  }
}

TEST_CASE("nested pairs match enumeration") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 300; ++round) {
    Instance in = random_instance(rng, 30);
    RespectScores s = compute_A(in.g, in.t);
    Weight best = INT64_MAX;
    for (int x = 1; x < in.t.size(); ++x) {
      if (!in.t.is_original_edge(x)) continue;
      for (int q = x + 1; q < in.t.topo.subtree_end(x); ++q) {
        if (in.t.is_original_edge(q)) best = std::min(best, cut_weight(in.g, below_one(in.t, x, q)));
      }
    }
    std::optional<CutResult> r = min_2respect_descendant(in.g, in.t, s);
    REQUIRE(r.has_value() == (best != INT64_MAX));
    if (!r) continue;
    CHECK(r->weight == best);
    CHECK(cut_weight(in.g, r->side) == best);
  }
}

TEST_CASE("descendant pass uses linearly many score operations") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 10; ++round) {
    const int n = 500 + static_cast<int>(rng() % 1500);
    WeightedGraph g = gen::gnp(n, 8.0 / n, {1, 100}, rng());
    RootedBinaryTree t = build_spanning_tree_view(g, gen::random_spanning_tree(g, rng()));
    RespectScores s = compute_A(g, t);
    OpCounter ops;
    min_2respect_descendant(g, t, s, {}, &ops);
    // Three adds per graph edge to build, three more in the sweep, one query per node.
    CHECK(ops.score_ops <= 6ull * static_cast<std::uint64_t>(g.edge_count()) + 2ull * t.size());
  }
}
