#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

struct ApproxResult {
  Weight estimate = 0;    // weight of `side` in the input graph
  std::vector<int> side;  // a genuine cut realizing the estimate
  Weight w_star = 0;      // smallest edge of a maximum spanning tree
  bool scaled = false;    // weights were rescaled to a polynomial range
  int rounds = 0;
};

/**
 * Constant-factor minimum cut estimate: c <= estimate <= (2+eps)(1+1/n) c.
 *
 * Edges heavier than n^2 w* are contracted first; if w* > n^3 the remaining
 * weights are rescaled to floor(w n^3 / w*). Then rounds of: record the
 * minimum weighted degree, and contract every edge whose endpoints a
 * maximum-adjacency ordering certifies as at least deg_min / (2+eps)
 * connected. Throws InputError on disconnected input or n < 2.
 */
ApproxResult approx_min_cut(const WeightedGraph& g, double epsilon);

/// Edges of a sampled multigraph: simple edges with multiplicities.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;        // w unused (= multiplicity)
  std::vector<int> source_edge;   // edge id in the graph sampled from
  std::vector<std::int64_t> multiplicity;
  std::int64_t cap = 0;
  bool exact = false;             // multiplicities equal the source weights

  std::int64_t total_multiplicity() const;
};

struct SamplingConstants {
  double k = 4.0;              // p = min(1, k ln n / estimate)
  double cap_factor = 66.0 / 65.0;
};

/// Per-edge counts of `draws` independent weight-proportional draws.
std::vector<std::int64_t> draw_edges(const WeightedGraph& g, std::int64_t draws,
                                     std::uint64_t seed);

/**
 * With p = min(1, k ln n / estimate): if p = 1 the graph itself (multiplicity
 * = weight); otherwise ceil(p W) weight-proportional draws, multiplicities
 * capped at ceil(cap_factor p estimate). If the sample is disconnected,
 * source edges joining its components are added with multiplicity 1.
 */
Multigraph sample_multigraph(const WeightedGraph& g, Weight estimate, std::uint64_t seed,
                             const SamplingConstants& constants = {});

/**
 * Greedy packing: while every copy has load below 1, add an increment of
 * 1/threshold to a minimum spanning tree with respect to the loads. Loads
 * and tree weights are counted in increments; threshold = max(1,
 * ceil(96 ln m')). Each parallel class spreads its increments round-robin
 * over its copies, so its least loaded copy has load picks / multiplicity.
 */
struct TreePacking {
  int n = 0;
  std::vector<std::vector<int>> trees;  // multigraph edge ids, sorted
  std::vector<std::int64_t> weight;     // increments per distinct tree
  std::vector<std::int64_t> picks;      // per multigraph edge: increments received
  std::int64_t iterations = 0;          // tau in increments
  std::int64_t threshold = 1;
  std::int64_t total_multiplicity = 0;

  /// Largest copy load in increments.
  std::int64_t max_load(const Multigraph& h) const;
};

/// Throws InputError if h is disconnected.
TreePacking pack_trees(const Multigraph& h);

/// k independent draws (tree indices) proportional to tree weight.
std::vector<int> sample_trees(const TreePacking& p, int k, std::uint64_t seed);

}  // namespace mincut
