#pragma once

#include <span>

#include "mincut/graph.hpp"

namespace mincut::oracle {

inline constexpr int kMaxExhaustiveVertices = 22;

/// Tries every side not containing vertex 1. Throws InputError for more than
/// kMaxExhaustiveVertices vertices or fewer than two.
CutResult exhaustive_min_cut(const WeightedGraph& g);

/// Stoer-Wagner on a dense matrix, O(n^3). Throws InputError if g is disconnected.
CutResult stoer_wagner(const WeightedGraph& g);

/// Evaluates the cut determined by every tree edge and every unordered pair
/// of tree edges directly from the definition.
CutResult brute_2respect(const WeightedGraph& g, std::span<const int> tree_edges);

}  // namespace mincut::oracle
