// Command-line front end: gen, mincut, respect2, verify, bench.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mincut/generators.hpp"
#include "mincut/oracle.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/random.hpp"
#include "mincut/respect2.hpp"

using namespace mincut;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct GenOptions {
  std::string model = "gnp";
  int n = 10;
  double p = 0.5;
  Weight wmin = 1;
  Weight wmax = 1;
  std::uint64_t seed = 1;
  int rows = 4;
  int cols = 4;
  int extra = 0;
  int block_size = 10;
  Weight intra = 10;
  int cross_edges = 1;
  Weight cross_weight = 1;
  std::string out;
  std::string sidecar;
};

struct SolveOptions {
  std::string input;
  std::string tree;
  std::uint64_t seed = 1;
  int trees = 0;
  int threads = 0;
  double k = SamplingConstants{}.k;
  std::string verify;
  bool json = false;
};

struct VerifyOptions {
  std::string oracle = "exhaustive";
  int runs = 100;
  int n = 10;
  double p = 0.5;
  Weight wmax = 10;
  std::uint64_t seed = 1;
  bool json = false;
};

struct BenchOptions {
  int min_log = 12;
  int max_log = 18;
  int pipeline_max_log = 12;
  int degree = 16;
  std::uint64_t seed = 1;
  double max_spread = 3.0;
  bool csv = false;
  bool json = false;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

int run_gen(const GenOptions& o) {
  const gen::WeightRange w{o.wmin, o.wmax};
  WeightedGraph g;
  std::vector<int> planted_side;
  if (o.model == "gnp") {
    g = gen::gnp(o.n, o.p, w, o.seed);
  } else if (o.model == "tree-plus") {
    g = gen::tree_plus(o.n, o.extra, w, o.seed);
  } else if (o.model == "grid") {
    g = gen::grid(o.rows, o.cols, w, o.seed);
  } else if (o.model == "planted") {
    auto pg = gen::planted(o.block_size, o.intra, o.cross_edges, o.cross_weight, o.seed);
    g = std::move(pg.graph);
    planted_side = std::move(pg.side);
  } else {
    throw InputError("unknown model '" + o.model + "'");
  }
  std::ostringstream text;
  write_graph(text, g);
  write_output(o.out, text.str());
  if (!planted_side.empty()) {
    std::string path = o.sidecar;
    if (path.empty() && !o.out.empty() && o.out != "-") path = o.out + ".side";
    if (!path.empty()) {
      std::ostringstream side;
      for (std::size_t i = 0; i < planted_side.size(); ++i) {
        side << (i ? " " : "") << planted_side[i];
      }
      side << "\n";
      write_output(path, side.str());
    }
  }
  return 0;
}

void print_cut(const CutResult& cut, bool as_json, const json& extra = json::object()) {
  if (!as_json) {
    std::cout << format_cut_text(cut);
    return;
  }
  json j = json::parse(format_cut_json(cut));
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  std::cout << j.dump() << "\n";
}

int run_mincut(const SolveOptions& o) {
  const WeightedGraph g = read_graph_file(o.input);
  PipelineConfig cfg;
  cfg.seed = o.seed;
  cfg.trees = o.trees;
  cfg.threads = o.threads;
  cfg.sampling.k = o.k;
  PipelineReport rep;
  const CutResult cut = min_cut(g, cfg, &rep);
  json extra = {{"estimate", rep.estimate},
                {"trees_solved", rep.trees_solved},
                {"packing_iterations", rep.packing_iterations}};
  int status = 0;
  if (!o.verify.empty()) {
    CutResult ref;
    if (o.verify == "exhaustive") {
      ref = oracle::exhaustive_min_cut(g);
    } else if (o.verify == "stoer-wagner") {
      ref = oracle::stoer_wagner(g);
    } else {
      throw InputError("unknown oracle '" + o.verify + "'");
    }
    extra["oracle_weight"] = ref.weight;
    extra["agree"] = ref.weight == cut.weight;
    if (ref.weight != cut.weight) status = kExitMismatch;
    if (!o.json) {
      std::cerr << "oracle " << o.verify << ": " << ref.weight
                << (ref.weight == cut.weight ? " (agree)" : " (MISMATCH)") << "\n";
    }
  }
  print_cut(cut, o.json, extra);
  return status;
}

int run_respect2(const SolveOptions& o) {
  const WeightedGraph g = read_graph_file(o.input);
  const std::vector<int> tree = read_tree_file(o.tree, g);
  print_cut(min_2respect(g, tree), o.json);
  return 0;
}

int run_verify(const VerifyOptions& o) {
  if (o.runs < 1) throw InputError("--runs must be positive");
  if (o.n < 2) throw InputError("--n must be at least 2");
  if (o.oracle == "exhaustive" && o.n > oracle::kMaxExhaustiveVertices) {
    throw InputError("exhaustive oracle supports n <= " +
                     std::to_string(oracle::kMaxExhaustiveVertices));
  }
  int agree = 0;
  json failures = json::array();
  for (int r = 0; r < o.runs; ++r) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(r);
    const WeightedGraph g = gen::gnp(o.n, o.p, {1, o.wmax}, seed);
    Weight got = 0;
    Weight want = 0;
    if (o.oracle == "respect2") {
      const std::vector<int> tree = gen::random_spanning_tree(g, seed);
      got = min_2respect(g, tree).weight;
      want = oracle::brute_2respect(g, tree).weight;
    } else {
      PipelineConfig cfg;
      cfg.seed = seed;
      got = min_cut(g, cfg).weight;
      if (o.oracle == "exhaustive") {
        want = oracle::exhaustive_min_cut(g).weight;
      } else if (o.oracle == "stoer-wagner") {
        want = oracle::stoer_wagner(g).weight;
      } else {
        throw InputError("unknown oracle '" + o.oracle + "'");
      }
    }
    if (got == want) {
      ++agree;
    } else {
      failures.push_back({{"seed", seed}, {"got", got}, {"oracle", want}});
    }
  }
  if (o.json) {
    std::cout << json{{"oracle", o.oracle}, {"runs", o.runs}, {"agree", agree}, {"failures", failures}}.dump()
              << "\n";
  } else {
    std::cout << agree << "/" << o.runs << " agree\n";
    for (const auto& f : failures) {
      std::cout << "  seed " << f["seed"] << ": got " << f["got"] << ", oracle " << f["oracle"] << "\n";
    }
  }
  return agree == o.runs ? 0 : kExitMismatch;
}

struct BenchRow {
  int log_m = 0;
  int n = 0;
  int m = 0;
  double seconds = 0;
  std::uint64_t ops = 0;
  double ratio = 0;
  double pipeline_seconds = -1;
  std::uint64_t pipeline_ops = 0;
};

int run_bench(const BenchOptions& o) {
  if (o.min_log < 2 || o.max_log < o.min_log || o.max_log > 24) {
    throw InputError("need 2 <= --min-log <= --max-log <= 24");
  }
  std::vector<BenchRow> rows;
  for (int k = o.min_log; k <= o.max_log; ++k) {
    BenchRow row;
    row.log_m = k;
    const double target = std::ldexp(1.0, k);
    row.n = std::max(4, static_cast<int>(2.0 * target / o.degree));
    const double p = std::min(1.0, 2.0 * target / (static_cast<double>(row.n) * (row.n - 1)));
    const WeightedGraph g = gen::gnp(row.n, p, {1, 100}, o.seed + k);
    row.m = g.edge_count();
    const std::vector<int> tree = gen::random_spanning_tree(g, o.seed + k);
    Respect2Stats stats;
    auto t0 = std::chrono::steady_clock::now();
    min_2respect(g, tree, &stats);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    row.ops = stats.ops.total();
    row.ratio = static_cast<double>(row.ops) / (row.m * std::log2(static_cast<double>(row.m)));
    if (k <= o.pipeline_max_log) {
      PipelineConfig cfg;
      cfg.seed = o.seed + k;
      PipelineReport rep;
      t0 = std::chrono::steady_clock::now();
      min_cut(g, cfg, &rep);
      row.pipeline_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      row.pipeline_ops = rep.ops.total();
    }
    rows.push_back(row);
  }
  double lo = rows.front().ratio;
  double hi = lo;
  for (const auto& r : rows) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  const double spread = hi / lo;
  const bool ok = spread < o.max_spread;

  if (o.json) {
    json j = {{"spread", spread}, {"max_spread", o.max_spread}, {"ok", ok}, {"rows", json::array()}};
    for (const auto& r : rows) {
      json row = {{"log_m", r.log_m}, {"n", r.n}, {"m", r.m}, {"seconds", r.seconds},
                  {"op_count", r.ops}, {"ratio", r.ratio}};
      if (r.pipeline_seconds >= 0) {
        row["pipeline_seconds"] = r.pipeline_seconds;
        row["pipeline_op_count"] = r.pipeline_ops;
      }
      j["rows"].push_back(row);
    }
    std::cout << j.dump() << "\n";
  } else if (o.csv) {
    std::cout << "m,n,seconds,op_count,ratio,pipeline_seconds,pipeline_op_count\r\n";
    for (const auto& r : rows) {
      std::cout << r.m << "," << r.n << "," << r.seconds << "," << r.ops << "," << r.ratio << ",";
      if (r.pipeline_seconds >= 0) std::cout << r.pipeline_seconds << "," << r.pipeline_ops;
      else std::cout << ",";
      std::cout << "\r\n";
    }
  } else {
    std::printf("%10s %8s %10s %14s %10s %12s\n", "m", "n", "seconds", "op_count", "ops/mlogm",
                "pipeline_s");
    for (const auto& r : rows) {
      std::printf("%10d %8d %10.4f %14llu %10.3f", r.m, r.n, r.seconds,
                  static_cast<unsigned long long>(r.ops), r.ratio);
      if (r.pipeline_seconds >= 0) std::printf(" %12.4f", r.pipeline_seconds);
      std::printf("\n");
    }
    std::printf("ratio spread %.3f (limit %.1f): %s\n", spread, o.max_spread, ok ? "ok" : "FAIL");
  }
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum cuts via tree packing and 2-respecting cuts"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph file");
  gen_cmd->add_option("--model", gen_opt.model, "gnp | planted | grid | tree-plus")
      ->check(CLI::IsMember({"gnp", "planted", "grid", "tree-plus"}));
  gen_cmd->add_option("--n", gen_opt.n, "Vertex count (gnp, tree-plus)");
  gen_cmd->add_option("--p", gen_opt.p, "Edge probability (gnp)");
  gen_cmd->add_option("--wmin", gen_opt.wmin, "Smallest edge weight");
  gen_cmd->add_option("--wmax", gen_opt.wmax, "Largest edge weight");
  gen_cmd->add_option("--seed", gen_opt.seed, "RNG seed");
  gen_cmd->add_option("--rows", gen_opt.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen_opt.cols, "Grid columns");
  gen_cmd->add_option("--extra", gen_opt.extra, "Extra edges on top of a random tree (tree-plus)");
  gen_cmd->add_option("--block-size", gen_opt.block_size, "Vertices per block (planted)");
  gen_cmd->add_option("--intra", gen_opt.intra, "Intra-block edge weight (planted)");
  gen_cmd->add_option("--cross-edges", gen_opt.cross_edges, "Crossing edges (planted)");
  gen_cmd->add_option("--cross-weight", gen_opt.cross_weight, "Crossing edge weight (planted)");
  gen_cmd->add_option("-o,--out", gen_opt.out, "Output file (default stdout)");
  gen_cmd->add_option("--sidecar", gen_opt.sidecar,
                      "Planted side file (default <out>.side when --out is given)");

  SolveOptions solve_opt;
  auto* mincut_cmd = app.add_subcommand("mincut", "Randomized minimum cut of a graph file");
  mincut_cmd->add_option("-i,--input", solve_opt.input, "Graph file")->required();
  mincut_cmd->add_option("--seed", solve_opt.seed, "RNG seed");
  mincut_cmd->add_option("--trees", solve_opt.trees, "Sampled tree count (default ceil(3 log2 n))");
  mincut_cmd->add_option("--threads", solve_opt.threads, "Worker threads (default: all cores)");
  mincut_cmd->add_option("--k", solve_opt.k, "Sampling constant in p = k ln n / estimate");
  mincut_cmd->add_option("--verify", solve_opt.verify, "Check against an oracle")
      ->check(CLI::IsMember({"exhaustive", "stoer-wagner"}));
  mincut_cmd->add_flag("--json", solve_opt.json, "JSON output");

  SolveOptions r2_opt;
  auto* r2_cmd = app.add_subcommand("respect2", "Minimum cut 2-respecting a given spanning tree");
  r2_cmd->add_option("-g,--graph", r2_opt.input, "Graph file")->required();
  r2_cmd->add_option("-t,--tree", r2_opt.tree, "Tree file (n-1 lines 'u v')")->required();
  r2_cmd->add_flag("--json", r2_opt.json, "JSON output");

  VerifyOptions ver_opt;
  auto* ver_cmd = app.add_subcommand("verify", "Compare solvers with an oracle on random graphs");
  ver_cmd->add_option("--oracle", ver_opt.oracle, "exhaustive | stoer-wagner | respect2")
      ->check(CLI::IsMember({"exhaustive", "stoer-wagner", "respect2"}));
  ver_cmd->add_option("--runs", ver_opt.runs, "Number of random instances");
  ver_cmd->add_option("--n", ver_opt.n, "Vertex count");
  ver_cmd->add_option("--p", ver_opt.p, "Edge probability");
  ver_cmd->add_option("--wmax", ver_opt.wmax, "Largest edge weight");
  ver_cmd->add_option("--seed", ver_opt.seed, "First seed");
  ver_cmd->add_flag("--json", ver_opt.json, "JSON output");

  BenchOptions bench_opt;
  auto* bench_cmd = app.add_subcommand("bench", "Operation-count scaling over doubling m");
  bench_cmd->add_option("--min-log", bench_opt.min_log, "Smallest log2 m");
  bench_cmd->add_option("--max-log", bench_opt.max_log, "Largest log2 m");
  bench_cmd->add_option("--pipeline-max-log", bench_opt.pipeline_max_log,
                        "Also time the full pipeline up to this log2 m");
  bench_cmd->add_option("--degree", bench_opt.degree, "Average degree of the gnp graphs");
  bench_cmd->add_option("--seed", bench_opt.seed, "RNG seed");
  bench_cmd->add_option("--max-spread", bench_opt.max_spread,
                        "Fail if max/min of op_count/(m log2 m) reaches this");
  bench_cmd->add_flag("--csv", bench_opt.csv, "CSV output");
  bench_cmd->add_flag("--json", bench_opt.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen_opt);
    if (*mincut_cmd) return run_mincut(solve_opt);
    if (*r2_cmd) return run_respect2(r2_opt);
    if (*ver_cmd) return run_verify(ver_opt);
    if (*bench_cmd) return run_bench(bench_opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
