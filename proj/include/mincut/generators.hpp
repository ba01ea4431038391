#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut::gen {

struct WeightRange {
  Weight lo = 1;
  Weight hi = 1;
};

/// G(n, p) with uniform weights; disconnected outcomes are joined by random
/// edges between consecutive components.
WeightedGraph gnp(int n, double p, WeightRange weights, std::uint64_t seed);

/// Random spanning tree plus `extra` further random edges (parallel picks merge).
WeightedGraph tree_plus(int n, int extra, WeightRange weights, std::uint64_t seed);

/// rows x cols grid graph.
WeightedGraph grid(int rows, int cols, WeightRange weights, std::uint64_t seed);

struct PlantedGraph {
  WeightedGraph graph;
  std::vector<int> side;  // vertices of the first block
};

/// Two complete blocks of `block_size` vertices with intra-block weight
/// `intra`, joined by `cross_edges` random edges of weight `cross`.
PlantedGraph planted(int block_size, Weight intra, int cross_edges, Weight cross,
                     std::uint64_t seed);

/// Uniformly random edge weights, then a minimum spanning tree: a random
/// spanning tree of g. Returns graph edge ids.
std::vector<int> random_spanning_tree(const WeightedGraph& g, std::uint64_t seed);

}  // namespace mincut::gen
