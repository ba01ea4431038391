#include "mincut/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mincut/respect2.hpp"

namespace mincut {

namespace {

int default_tree_count(int n) {
  return std::max(1, static_cast<int>(std::ceil(3.0 * std::log2(static_cast<double>(n)))));
}

// Names a contracted edge by one original edge between the two classes.
std::pair<int, int> original_edge(const WeightedGraph& g, const VertexMapping& map,
                                  std::pair<int, int> contracted) {
  if (contracted.first == 0) return contracted;
  for (const Edge& e : g.edges()) {
    const int a = map.forward[e.u];
    const int b = map.forward[e.v];
    if ((a == contracted.first && b == contracted.second) ||
        (a == contracted.second && b == contracted.first)) {
      return {e.u, e.v};
    }
  }
  throw std::logic_error("contracted tree edge has no original edge");
}

}  // namespace

CutResult min_cut(const WeightedGraph& g, const PipelineConfig& cfg, PipelineReport* report) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("minimum cut needs at least two vertices");
  if (!g.is_connected()) throw InputError("graph is disconnected");
  PipelineReport local;
  PipelineReport& rep = report ? *report : local;

  const ApproxResult approx = approx_min_cut(g, cfg.epsilon);
  rep.estimate = approx.estimate;
  Contraction c = contract_heavy_edges(g, approx.estimate);
  if (c.graph.vertex_count() < 2) c = contract_heavy_edges(g, g.total_weight());
  const WeightedGraph& gc = c.graph;
  rep.contracted_vertices = gc.vertex_count();

  const Multigraph h = sample_multigraph(gc, approx.estimate, cfg.seed, cfg.sampling);
  rep.multigraph_edges = h.edges.size();
  rep.total_multiplicity = h.total_multiplicity();
  const TreePacking packing = pack_trees(h);
  rep.packing_iterations = packing.iterations;
  rep.packing_threshold = packing.threshold;
  rep.distinct_trees = packing.trees.size();

  const int k = cfg.trees > 0 ? cfg.trees : default_tree_count(n);
  rep.trees_sampled = k;
  std::vector<int> picked = sample_trees(packing, k, cfg.seed);
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  rep.trees_solved = static_cast<int>(picked.size());

  std::vector<CutResult> results(picked.size());
  std::vector<OpCounter> ops(picked.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < picked.size(); i = next++) {
      try {
        std::vector<int> tree_edges;
        for (int id : packing.trees[picked[i]]) tree_edges.push_back(h.source_edge[id]);
        Respect2Stats stats;
        results[i] = min_2respect(gc, tree_edges, &stats);
        ops[i] = stats.ops;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(picked.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    rep.ops += ops[i];
    if (results[i].weight < results[best].weight) best = i;
  }
  CutResult out = std::move(results[best]);
  out.side = expand_cut(c.mapping, out.side);
  out.provenance.first = original_edge(g, c.mapping, out.provenance.first);
  out.provenance.second = original_edge(g, c.mapping, out.provenance.second);
  const Weight check = cut_weight(g, out.side);
  if (check != out.weight) {
    throw std::logic_error("pipeline cut weight " + std::to_string(out.weight) +
                           " disagrees with its side (" + std::to_string(check) + ")");
  }
  return out;
}

}  // namespace mincut
