#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bcs/graph.hpp"
#include "bcs/pipeline.hpp"
#include "bcs/reduce.hpp"

namespace bcs {

/// Label used for the natural-order run (no technique, not even 'o').
inline constexpr const char* kNaturalLabel = "natural";

struct BenchRecord {
  std::string graph;
  std::string combo;
  double preprocess_s = 0.0;
  double phase1_s = 0.0;
  double phase2_s = 0.0;
  double total_s = 0.0;
  std::size_t remaining_edges = 0;
  std::size_t components = 0;
  /// Edge counts of the components handed to kernels (not part of the CSV).
  std::vector<std::size_t> component_edges;
};

struct BenchOptions {
  std::vector<Combination> combos = Combination::standard_set();
  int reps = 3;
  /// Also time plain Brandes on the unreordered graph.
  bool natural_baseline = false;
  BcOptions bc;
};

/// Runs `reps` repetitions and returns the one with the median total time.
BenchRecord bench_once(const Graph& g, const std::string& graph_name, const Combination& combo,
                       int reps, const BcOptions& options);

/// All configured combinations on one graph; the natural baseline, when
/// enabled, comes first under kNaturalLabel.
std::vector<BenchRecord> bench_graph(const Graph& g, const std::string& graph_name,
                                     const BenchOptions& options);

/// graph,combo,preprocess_s,phase1_s,phase2_s,total_s,remaining_edges,components
void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records);
void write_bench_header(std::ostream& os);
void write_bench_row(std::ostream& os, const BenchRecord& r);

/// Parses the bench CSV back. Throws std::runtime_error with the line number
/// on malformed input.
std::vector<BenchRecord> read_bench_csv(std::istream& is);

/// Times of every record divided by the total of combo "o" on the same graph,
/// plus the ratio to the natural-order run where one exists:
/// graph,combo,preprocess,phase1,phase2,total,vs_natural
void write_normalized_csv(std::ostream& os, std::span<const BenchRecord> records);

/// One row per kernel component: graph,combo,component,edges.
void write_component_csv(std::ostream& os, std::span<const BenchRecord> records);

}  // namespace bcs
