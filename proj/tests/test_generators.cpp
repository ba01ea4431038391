#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mincut/generators.hpp"
#include "mincut/oracle.hpp"

using namespace mincut;

namespace {

bool same_graph(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (int i = 0; i < a.edge_count(); ++i) {
    if (a.edge(i).u != b.edge(i).u || a.edge(i).v != b.edge(i).v || a.edge(i).w != b.edge(i).w) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("generators are deterministic and connected") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CHECK(same_graph(gen::gnp(50, 0.05, {1, 9}, seed), gen::gnp(50, 0.05, {1, 9}, seed)));
    CHECK(gen::gnp(50, 0.01, {1, 9}, seed).is_connected());
    CHECK(gen::tree_plus(30, 0, {1, 9}, seed).edge_count() == 29);
    CHECK(gen::tree_plus(30, 10, {1, 9}, seed).is_connected());
  }
  CHECK_FALSE(same_graph(gen::gnp(50, 0.2, {1, 9}, 1), gen::gnp(50, 0.2, {1, 9}, 2)));
}

TEST_CASE("weights stay in range") {
  WeightedGraph g = gen::gnp(80, 0.3, {5, 7}, 3);
  for (const Edge& e : g.edges()) {
    CHECK(e.w >= 5);
    CHECK(e.w <= 7);
  }
}

TEST_CASE("grid") {
  WeightedGraph g = gen::grid(3, 4, {1, 1}, 1);
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 3 * 3 + 2 * 4);
  CHECK(oracle::exhaustive_min_cut(g).weight == 2);
}

TEST_CASE("planted blocks") {
  gen::PlantedGraph pg = gen::planted(10, 5, 2, 1, 4);
  CHECK(pg.graph.vertex_count() == 20);
  CHECK(pg.side.size() == 10);
  CHECK(cut_weight(pg.graph, pg.side) == 2);
  CHECK(oracle::stoer_wagner(pg.graph).weight == 2);
}

TEST_CASE("random spanning trees span") {
  WeightedGraph g = gen::gnp(60, 0.2, {1, 9}, 5);
  std::vector<int> t = gen::random_spanning_tree(g, 8);
  REQUIRE(t.size() == 59);
  detail::DisjointSets sets(61);
  for (int id : t) CHECK(sets.unite(g.edge(id).u, g.edge(id).v));
  CHECK(gen::random_spanning_tree(g, 8) == t);
  CHECK(gen::random_spanning_tree(g, 9) != t);
}
