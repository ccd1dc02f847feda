#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bcs/graph.hpp"
#include "bcs/kernels.hpp"
#include "bcs/reduce.hpp"

namespace bcs {

struct BcOptions {
  VertexId max_side_degree = 4;
  /// BFS ordering start vertex. When unset and `order_seed` is set, the start
  /// is drawn from the seed; otherwise vertex 0.
  std::optional<VertexId> order_start;
  std::optional<std::uint64_t> order_seed;
  bool component_histograms = true;
  std::function<void(const PassStats&, const WorkGraph&)> after_pass;
};

struct BcResult {
  ScoreVector scores;

  double preprocess_seconds = 0.0;
  double phase1_seconds = 0.0;
  double phase2_seconds = 0.0;
  double total_seconds = 0.0;

  VertexId remaining_vertices = 0;
  std::size_t remaining_edges = 0;
  /// Edge counts of the components handed to kernels, descending.
  std::vector<std::size_t> component_edges;
  std::vector<PassStats> passes;
  /// How many components each kernel ran on, indexed by KernelKind.
  std::array<std::size_t, 4> kernel_uses{};
};

/// Exact betweenness of every vertex of g (ordered pairs) computed through
/// the given reductions.
BcResult compute_betweenness(const Graph& g, const Combination& combo, const BcOptions& options = {});

}  // namespace bcs
