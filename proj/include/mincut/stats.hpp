#pragma once

#include <cstdint>

namespace mincut {

/// Instrumented operation counts; used to check work bounds independent of
/// wall-clock time.
struct OpCounter {
  std::uint64_t score_ops = 0;       // ScoreTree add / path / subtree / point calls
  std::uint64_t lca_queries = 0;
  std::uint64_t induced_work = 0;    // source nodes swept or weighted queries issued
  std::uint64_t bipartite_work = 0;  // node and cross-edge visits in the solver

  std::uint64_t total() const { return score_ops + lca_queries + induced_work + bipartite_work; }

  OpCounter& operator+=(const OpCounter& o) {
    score_ops += o.score_ops;
    lca_queries += o.lca_queries;
    induced_work += o.induced_work;
    bipartite_work += o.bipartite_work;
    return *this;
  }
};

}  // namespace mincut
