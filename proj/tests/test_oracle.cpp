#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mincut/generators.hpp"
#include "mincut/oracle.hpp"
#include "support.hpp"

using namespace mincut;

TEST_CASE("triangle") {
  WeightedGraph g = testing::triangle();
  CutResult a = oracle::exhaustive_min_cut(g);
  CHECK(a.weight == 3);
  CHECK(a.side == std::vector<int>{2});
  CHECK(cut_weight(g, a.side) == 3);
  CHECK(oracle::stoer_wagner(g).weight == 3);
}

TEST_CASE("single edge and cycle") {
  CHECK(oracle::exhaustive_min_cut(parse_graph_string("2 1\n1 2 9\n")).weight == 9);
  WeightedGraph cycle = parse_graph_string("4 4\n1 2 5\n2 3 5\n3 4 5\n4 1 5\n");
  CHECK(oracle::exhaustive_min_cut(cycle).weight == 10);
  CHECK(oracle::stoer_wagner(cycle).weight == 10);
}

TEST_CASE("exhaustive side never contains vertex 1") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 50; ++round) {
    WeightedGraph g = testing::random_graph(2 + static_cast<int>(rng() % 10), rng, 9);
    CutResult r = oracle::exhaustive_min_cut(g);
    REQUIRE_FALSE(r.side.empty());
    CHECK(r.side.front() != 1);
    CHECK(cut_weight(g, r.side) == r.weight);
  }
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(oracle::exhaustive_min_cut(WeightedGraph(1, {})), InputError);
  WeightedGraph big = gen::tree_plus(oracle::kMaxExhaustiveVertices + 1, 5, {1, 3}, 1);
  CHECK_THROWS_AS(oracle::exhaustive_min_cut(big), InputError);
  std::vector<Edge> two{{1, 2, 1}, {3, 4, 1}};
  CHECK_THROWS_AS(oracle::stoer_wagner(WeightedGraph(4, two)), InputError);
}

TEST_CASE("Stoer-Wagner agrees with exhaustive search") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);
    WeightedGraph g = testing::random_graph(n, rng, 1 + rng() % 20);
    CutResult a = oracle::exhaustive_min_cut(g);
    CutResult b = oracle::stoer_wagner(g);
    REQUIRE(a.weight == b.weight);
    CHECK(cut_weight(g, b.side) == b.weight);
  }
}

TEST_CASE("2-respecting brute force bounds the minimum cut") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);
    WeightedGraph g = testing::random_graph(n, rng, 15);
    std::vector<int> tree = gen::random_spanning_tree(g, rng());
    CutResult brute = oracle::brute_2respect(g, tree);
    CHECK(brute.weight >= oracle::exhaustive_min_cut(g).weight);
    CHECK(cut_weight(g, brute.side) == brute.weight);
  }
}

TEST_CASE("2-respecting brute force on a path tree") {
  // Path 1-2-3 inside the triangle: cutting both tree edges isolates vertex 2.
  WeightedGraph g = testing::triangle();
  CutResult r = oracle::brute_2respect(g, std::vector<int>{0, 1});
  CHECK(r.weight == 3);
  CHECK(r.side == std::vector<int>{2});
  CHECK(r.provenance.kind == Provenance::Kind::kTwoRespecting);
}
