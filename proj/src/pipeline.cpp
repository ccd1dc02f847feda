#include "bcs/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace bcs {
namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

VertexId order_start(const Graph& g, const BcOptions& options) {
  if (g.num_vertices() == 0) return 0;
  if (options.order_start) {
    if (*options.order_start >= g.num_vertices())
      throw std::invalid_argument("ordering start vertex out of range");
    return *options.order_start;
  }
  if (options.order_seed) {
    std::mt19937_64 rng(*options.order_seed);
    return static_cast<VertexId>(rng() % g.num_vertices());
  }
  return 0;
}

}  // namespace

BcResult compute_betweenness(const Graph& g, const Combination& combo, const BcOptions& options) {
  BcResult result;
  const auto t0 = Clock::now();

  const bool ordered = combo.has(Technique::kOrder);
  VertexPermutation perm;
  Graph relabeled;
  if (ordered) {
    perm = bfs_order(g, order_start(g, options));
    relabeled = relabel(g, perm);
  }
  const Graph& input = ordered ? relabeled : g;

  PreprocessOptions pre_options;
  pre_options.max_side_degree = options.max_side_degree;
  pre_options.component_histograms = options.component_histograms;
  pre_options.after_pass = options.after_pass;
  PreprocessResult pre = preprocess(input, combo, pre_options);
  auto jobs = extract_components(pre.work);

  const auto t1 = Clock::now();
  ScoreVector kernel_out(input.num_vertices(), 0.0);
  KernelTimings timings;
  for (const auto& job : jobs) {
    const KernelKind kind = run_kernel(job.graph, job.input, kernel_out, &timings);
    ++result.kernel_uses[static_cast<std::size_t>(kind)];
    result.component_edges.push_back(job.graph.num_edges());
  }
  const auto t2 = Clock::now();

  ScoreVector final_scores = finalize(pre.work, pre.partial, kernel_out);
  if (ordered) {
    result.scores.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) result.scores[v] = final_scores[perm.forward[v]];
  } else {
    result.scores = std::move(final_scores);
  }
  const auto t3 = Clock::now();

  result.preprocess_seconds = seconds(t0, t1) + seconds(t2, t3);
  result.phase1_seconds = timings.phase1_seconds;
  result.phase2_seconds = timings.phase2_seconds;
  result.total_seconds = seconds(t0, t3);
  result.remaining_vertices = pre.work.num_live_vertices();
  result.remaining_edges = pre.work.num_live_edges();
  std::sort(result.component_edges.rbegin(), result.component_edges.rend());
  result.passes = std::move(pre.stats);
  return result;
}

}  // namespace bcs
