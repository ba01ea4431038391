#pragma once

#include <random>
#include <vector>

#include "mincut/generators.hpp"
#include "mincut/graph.hpp"
#include "mincut/tree.hpp"

namespace testing {

inline mincut::WeightedGraph triangle() {
  return mincut::parse_graph_string("3 3\n1 2 1\n2 3 2\n1 3 3\n");
}

/// Random rooted tree on n nodes in preorder numbering; with `binary`, no
/// node gets more than two children.
inline mincut::StaticTree random_tree(int n, std::mt19937_64& rng, bool binary = false) {
  std::vector<std::vector<int>> children(n);
  std::vector<int> open{0};
  for (int v = 1; v < n; ++v) {
    int p;
    if (binary) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng);
      p = open[k];
      if (children[p].size() == 1) {
        open[k] = open.back();
        open.pop_back();
      }
    } else {
      p = std::uniform_int_distribution<int>(0, v - 1)(rng);
    }
    children[p].push_back(v);
    open.push_back(v);
  }
  return mincut::StaticTree::from_children(children, 0, nullptr);
}

/// Random connected graph with n vertices: a random tree plus extra edges.
inline mincut::WeightedGraph random_graph(int n, std::mt19937_64& rng, mincut::Weight wmax) {
  const int extra = std::uniform_int_distribution<int>(0, 2 * n)(rng);
  return mincut::gen::tree_plus(n, extra, {1, wmax}, rng());
}

}  // namespace testing
