#include "mincut/respect2.hpp"

#include <stdexcept>

#include "mincut/respect_basic.hpp"

namespace mincut {

CutResult min_2respect(const WeightedGraph& g, std::span<const int> tree_edges,
                       Respect2Stats* stats) {
  if (g.vertex_count() < 2) throw InputError("graph needs at least two vertices");
  return min_2respect(g, build_spanning_tree_view(g, tree_edges), stats);
}

CutResult min_2respect(const WeightedGraph& g, const RootedBinaryTree& t, Respect2Stats* stats) {
  OpCounter local_ops;
  BipartiteStats local_bip;
  OpCounter* ops = stats ? &stats->ops : &local_ops;
  BipartiteStats* bip = stats ? &stats->bipartite : &local_bip;

  const RespectScores scores = compute_A(g, t);
  CutResult best = min_1respect(g, t, scores);
  if (auto d = min_2respect_descendant(g, t, scores, {}, ops); d && d->weight < best.weight) {
    best = std::move(*d);
  }
  if (auto i = min_2respect_independent(g, t, scores, ops, bip); i && i->weight < best.weight) {
    best = std::move(*i);
  }
  const Weight check = cut_weight(g, best.side);
  if (check != best.weight) {
    throw std::logic_error("2-respecting cut reports weight " + std::to_string(best.weight) +
                           " but its side has weight " + std::to_string(check));
  }
  return best;
}

}  // namespace mincut
