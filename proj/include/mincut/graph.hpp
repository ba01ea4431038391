#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mincut/cost.hpp"

namespace mincut {

/// Input problems: malformed files, invalid vertex sets, non-spanning trees.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Sum of all edge weights must stay below this so that signed score
/// arithmetic (sums and differences of a few cut values) cannot overflow.
inline constexpr Weight kMaxTotalWeight = INT64_MAX / 8;

struct Edge {
  int u = 0;
  int v = 0;
  Weight w = 0;
};

/**
 * Undirected simple graph on vertices 1..n with positive integer weights.
 * Parallel edges are merged by summing their weights; every stored edge has
 * u < v. Immutable after construction.
 */
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Validates and canonicalizes; throws InputError on self-loops, ids out of
  /// range, non-positive weights or total-weight overflow.
  WeightedGraph(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  Weight total_weight() const { return total_; }

  /// Edge id of {u, v}, if present.
  std::optional<int> find_edge(int u, int v) const;

  struct Incidence {
    int neighbor;
    int edge;
  };
  std::span<const Incidence> incident(int v) const {
    return {adj_.data() + adj_begin_[v], adj_.data() + adj_begin_[v + 1]};
  }

  bool is_connected() const;

 private:
  static std::uint64_t key(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  int n_ = 0;
  Weight total_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> adj_begin_;
  std::vector<Incidence> adj_;
};

WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph_string(const std::string& text);
WeightedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const WeightedGraph& g);

/// Tree file: n-1 lines `u v`, comments with '#'. Returns graph edge ids.
std::vector<int> parse_tree(std::istream& in, const WeightedGraph& g);
std::vector<int> read_tree_file(const std::string& path, const WeightedGraph& g);

/// Total weight of edges with exactly one endpoint in `side`.
/// Throws InputError if side is empty, covers every vertex, or names an
/// unknown vertex.
Weight cut_weight(const WeightedGraph& g, std::span<const int> side);

/// Same, with side given as a membership vector indexed by vertex id.
Weight cut_weight_membership(const WeightedGraph& g, const std::vector<char>& in_side);

/// forward[v] maps original vertex v to its contracted vertex; classes[c]
/// lists the original vertices merged into c (index 0 unused on both).
struct VertexMapping {
  std::vector<int> forward;
  std::vector<std::vector<int>> classes;

  static VertexMapping identity(int n);
  int original_count() const { return static_cast<int>(forward.size()) - 1; }
  int contracted_count() const { return static_cast<int>(classes.size()) - 1; }
};

struct Contraction {
  WeightedGraph graph;
  VertexMapping mapping;
};

/// Merges the endpoints of every edge heavier than `threshold`.
Contraction contract_heavy_edges(const WeightedGraph& g, Weight threshold);

/// Lifts a vertex set of a contracted graph back to original vertex ids.
std::vector<int> expand_cut(const VertexMapping& mapping, std::span<const int> side);

struct Provenance {
  enum class Kind { kOneRespecting, kTwoRespecting, kOracle };
  Kind kind = Kind::kOracle;
  /// Determining tree edges as (u, v) vertex pairs; second unused for kOneRespecting.
  std::pair<int, int> first{0, 0};
  std::pair<int, int> second{0, 0};

  std::string to_string() const;
};

struct CutResult {
  Weight weight = 0;
  std::vector<int> side;  // sorted original vertex ids
  Provenance provenance;
};

std::string format_cut_text(const CutResult& cut);
std::string format_cut_json(const CutResult& cut);

namespace detail {

/// Minimal union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace detail

}  // namespace mincut
