#include "mincut/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace mincut {

std::string to_string(const Cost& c) {
  if (c.inf == 0) return std::to_string(c.fin);
  return std::to_string(c.inf) + "*inf" + (c.fin >= 0 ? "+" : "") + std::to_string(c.fin);
}

ParseError::ParseError(int line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

WeightedGraph::WeightedGraph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw InputError("graph must have at least one vertex");
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw InputError("vertex id out of range in edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.w < 1) throw InputError("edge weight must be >= 1");
    if (e.w > kMaxTotalWeight - total_) throw InputError("total edge weight overflows");
    total_ += e.w;
    int a = std::min(e.u, e.v);
    int b = std::max(e.u, e.v);
    auto [it, inserted] = index_.try_emplace(key(a, b), edge_count());
    if (inserted) {
      edges_.push_back({a, b, e.w});
    } else {
      edges_[it->second].w += e.w;
    }
  }

  adj_begin_.assign(n_ + 2, 0);
  for (const Edge& e : edges_) {
    ++adj_begin_[e.u + 1];
    ++adj_begin_[e.v + 1];
  }
  std::partial_sum(adj_begin_.begin(), adj_begin_.end(), adj_begin_.begin());
  adj_.resize(2 * edges_.size());
  std::vector<int> fill(adj_begin_.begin(), adj_begin_.end() - 1);
  for (int id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    adj_[fill[e.u]++] = {e.v, id};
    adj_[fill[e.v]++] = {e.u, id};
  }
}

std::optional<int> WeightedGraph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool WeightedGraph::is_connected() const {
  std::vector<char> seen(n_ + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, id] : incident(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

namespace {

// Splits a line into integer tokens; comments start with '#'.
std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view tok, int line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, std::string(what) + " overflows 64 bits");
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::vector<Edge> edges;
  Weight total = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2) throw ParseError(lineno, "header must be 'n m'");
      n = to_int(tok[0], lineno, "vertex count");
      m = to_int(tok[1], lineno, "edge count");
      if (n < 1 || n > (1 << 30)) throw ParseError(lineno, "vertex count out of range");
      if (m < 0) throw ParseError(lineno, "negative edge count");
      edges.reserve(static_cast<std::size_t>(std::min<std::int64_t>(m, 1 << 24)));
      continue;
    }
    if (tok.size() != 3) throw ParseError(lineno, "edge line must be 'u v w'");
    if (static_cast<std::int64_t>(edges.size()) == m) {
      throw ParseError(lineno, "more edge lines than declared");
    }
    std::int64_t u = to_int(tok[0], lineno, "vertex id");
    std::int64_t v = to_int(tok[1], lineno, "vertex id");
    std::int64_t w = to_int(tok[2], lineno, "weight");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (w < 1) throw ParseError(lineno, "weight must be >= 1");
    if (w > kMaxTotalWeight - total) throw ParseError(lineno, "total weight overflow");
    total += w;
    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
  }
  if (n < 0) throw ParseError(lineno + 1, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
  }
  return WeightedGraph(static_cast<int>(n), edges);
}

WeightedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

std::vector<int> parse_tree(std::istream& in, const WeightedGraph& g) {
  std::vector<int> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(lineno, "tree line must be 'u v'");
    std::int64_t u = to_int(tok[0], lineno, "vertex id");
    std::int64_t v = to_int(tok[1], lineno, "vertex id");
    if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count()) {
      throw ParseError(lineno, "vertex id out of range");
    }
    auto id = g.find_edge(static_cast<int>(u), static_cast<int>(v));
    if (!id) throw ParseError(lineno, "tree edge is not an edge of the graph");
    ids.push_back(*id);
  }
  return ids;
}

std::vector<int> read_tree_file(const std::string& path, const WeightedGraph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tree file '" + path + "'");
  return parse_tree(in, g);
}

Weight cut_weight_membership(const WeightedGraph& g, const std::vector<char>& in_side) {
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if (in_side[e.u] != in_side[e.v]) total += e.w;
  }
  return total;
}

Weight cut_weight(const WeightedGraph& g, std::span<const int> side) {
  std::vector<char> in_side(g.vertex_count() + 1, 0);
  int count = 0;
  for (int v : side) {
    if (v < 1 || v > g.vertex_count()) throw InputError("unknown vertex " + std::to_string(v));
    if (!in_side[v]) ++count;
    in_side[v] = 1;
  }
  if (count == 0) throw InputError("cut side is empty");
  if (count == g.vertex_count()) throw InputError("cut side contains every vertex");
  return cut_weight_membership(g, in_side);
}

VertexMapping VertexMapping::identity(int n) {
  VertexMapping m;
  m.forward.resize(n + 1);
  m.classes.resize(n + 1);
  for (int v = 1; v <= n; ++v) {
    m.forward[v] = v;
    m.classes[v] = {v};
  }
  return m;
}

Contraction contract_heavy_edges(const WeightedGraph& g, Weight threshold) {
  const int n = g.vertex_count();
  detail::DisjointSets sets(n + 1);
  for (const Edge& e : g.edges()) {
    if (e.w > threshold) sets.unite(e.u, e.v);
  }
  // Contracted ids follow the smallest original vertex of each class.
  VertexMapping mapping;
  mapping.forward.assign(n + 1, 0);
  mapping.classes.assign(1, {});
  std::vector<int> id_of_root(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    int r = sets.find(v);
    if (id_of_root[r] == 0) {
      id_of_root[r] = static_cast<int>(mapping.classes.size());
      mapping.classes.emplace_back();
    }
    mapping.forward[v] = id_of_root[r];
    mapping.classes[id_of_root[r]].push_back(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    int a = mapping.forward[e.u];
    int b = mapping.forward[e.v];
    if (a != b) kept.push_back({a, b, e.w});
  }
  return {WeightedGraph(mapping.contracted_count(), kept), std::move(mapping)};
}

std::vector<int> expand_cut(const VertexMapping& mapping, std::span<const int> side) {
  const int k = mapping.contracted_count();
  std::vector<char> seen(k + 1, 0);
  int count = 0;
  std::vector<int> out;
  for (int c : side) {
    if (c < 1 || c > k) throw InputError("unknown contracted vertex " + std::to_string(c));
    if (seen[c]) continue;
    seen[c] = 1;
    ++count;
    out.insert(out.end(), mapping.classes[c].begin(), mapping.classes[c].end());
  }
  if (count == 0) throw InputError("cut side is empty");
  if (count == k) throw InputError("cut side contains every vertex");
  std::sort(out.begin(), out.end());
  return out;
}

std::string Provenance::to_string() const {
  auto edge = [](std::pair<int, int> e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
  };
  switch (kind) {
    case Kind::kOneRespecting:
      return "one-respecting(" + edge(first) + ")";
    case Kind::kTwoRespecting:
      return "two-respecting(" + edge(first) + "," + edge(second) + ")";
    case Kind::kOracle:
      break;
  }
  return "oracle";
}

std::string format_cut_text(const CutResult& cut) {
  std::string out = std::to_string(cut.weight) + "\n";
  for (std::size_t i = 0; i < cut.side.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(cut.side[i]);
  }
  out += '\n';
  return out;
}

std::string format_cut_json(const CutResult& cut) {
  nlohmann::json j;
  j["weight"] = cut.weight;
  j["side"] = cut.side;
  j["provenance"] = cut.provenance.to_string();
  return j.dump();
}

}  // namespace mincut
