#pragma once

#include <cstdint>

#include "mincut/graph.hpp"
#include "mincut/packing.hpp"
#include "mincut/stats.hpp"

namespace mincut {

struct PipelineConfig {
  std::uint64_t seed = 1;
  SamplingConstants sampling;
  double epsilon = 1.0;
  int trees = 0;    // 0: ceil(3 log2 n)
  int threads = 0;  // 0: hardware concurrency
};

struct PipelineReport {
  Weight estimate = 0;
  int contracted_vertices = 0;
  std::size_t multigraph_edges = 0;
  std::int64_t total_multiplicity = 0;
  std::int64_t packing_iterations = 0;
  std::int64_t packing_threshold = 0;
  std::size_t distinct_trees = 0;
  int trees_sampled = 0;
  int trees_solved = 0;
  OpCounter ops;
};

/**
 * Monte Carlo minimum cut: estimate, contract edges above the estimate,
 * sample a multigraph, pack trees, then solve the 2-respecting problem for
 * the sampled trees (in parallel) and keep the best. The result is always a
 * genuine cut of g; it is minimum with high probability. Deterministic for
 * a fixed config. Throws InputError if g is disconnected or has < 2 vertices.
 */
CutResult min_cut(const WeightedGraph& g, const PipelineConfig& cfg = {},
                  PipelineReport* report = nullptr);

}  // namespace mincut
