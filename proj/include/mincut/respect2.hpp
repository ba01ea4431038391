#pragma once

#include <span>

#include "mincut/bipartite.hpp"
#include "mincut/graph.hpp"
#include "mincut/stats.hpp"
#include "mincut/tree.hpp"

namespace mincut {

struct Respect2Stats {
  OpCounter ops;
  BipartiteStats bipartite;
};

/**
 * Minimum over all cuts crossed by at most two edges of the given spanning
 * tree. Ties resolve to the first candidate found in the order: single
 * edges, nested pairs, then independent pairs by preorder of their branching
 * node. The reported weight is re-evaluated on the returned side; a mismatch
 * throws std::logic_error.
 */
CutResult min_2respect(const WeightedGraph& g, std::span<const int> tree_edges,
                       Respect2Stats* stats = nullptr);
CutResult min_2respect(const WeightedGraph& g, const RootedBinaryTree& t,
                       Respect2Stats* stats = nullptr);

}  // namespace mincut
