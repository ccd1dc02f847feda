#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcs/graph.hpp"
#include "bcs/kernels.hpp"
#include "bcs/work_graph.hpp"

namespace bcs {

enum class Technique : char {
  kOrder = 'o',
  kDegree1 = 'd',
  kBridge = 'b',
  kArticulation = 'a',
  kSide = 's',
  kIdentical = 'i',
};

/// Ordered set of reduction techniques, written as a string such as "odbasi".
/// Letter order is the order of application within one preprocessing
/// iteration; 'o' (BFS relabeling) always happens once, before anything else.
class Combination {
 public:
  Combination() = default;

  /// Throws std::invalid_argument on unknown or repeated letters.
  static Combination parse(std::string_view text);

  /// The seven benchmark combinations: o, od, odb, odba, odbas, odbai,
  /// odbasi.
  static const std::vector<Combination>& standard_set();

  const std::vector<Technique>& techniques() const { return techniques_; }
  bool has(Technique t) const;
  std::string str() const;

  bool operator==(const Combination&) const = default;

 private:
  std::vector<Technique> techniques_;
};

// ---------------------------------------------------------------------------
// Passes. Each returns the number of changes it made; scores that can be
// settled immediately are added to `out`, indexed by original id.

/// Splits every component at its articulation vertices in one block
/// decomposition. Each cut vertex gets one local copy per side whose reach is
/// the mass of everything on the other sides, itself included. Vertices
/// standing for identical classes are never split. Returns copies created.
std::size_t shatter_articulation(WorkGraph& w);

/// Removes every bridge whose endpoints are plain vertices, moving the mass of
/// each side onto the opposite endpoint and settling the cross dependencies of
/// the two endpoints.
std::size_t remove_bridges(WorkGraph& w, ScoreVector& out);

/// Cascading removal of degree-1 vertices; also drops isolated vertices.
std::size_t remove_degree1(WorkGraph& w, ScoreVector& out);

/// One sweep removing vertices of degree <= max_degree whose neighborhood is
/// a clique, each compensated by a side BFS.
std::size_t remove_side_vertices(WorkGraph& w, ScoreVector& out, VertexId max_degree = 4);

/// Folds type-I (equal open neighborhood) and then type-II (equal closed
/// neighborhood) vertices of equal reach into one representative.
std::size_t merge_identical(WorkGraph& w);

/// Scores owed to the members of an identical class for the paths between
/// members, which the kernels skip. Type-I classes also credit their common
/// neighbors.
void add_class_correction(const WorkGraph& w, VertexId rep, ScoreVector& out);

// ---------------------------------------------------------------------------

struct PassStats {
  std::string pass;
  int iteration = 0;
  std::size_t changes = 0;
  VertexId remaining_vertices = 0;
  std::size_t remaining_edges = 0;
  /// Edge counts of the components that still have edges, descending.
  std::vector<std::size_t> component_edges;
};

struct PreprocessOptions {
  VertexId max_side_degree = 4;
  /// Collect per-component edge counts after every pass (costs O(n + m)).
  bool component_histograms = true;
  /// Called after every pass, e.g. to check invariants.
  std::function<void(const PassStats&, const WorkGraph&)> after_pass;
};

struct PreprocessResult {
  WorkGraph work;
  ScoreVector partial;
  std::vector<PassStats> stats;
  int iterations = 0;
};

/// Runs the combination's passes in letter order, repeating whole iterations
/// until one makes no change. Ignores 'o'.
PreprocessResult preprocess(const Graph& g, const Combination& combo,
                            const PreprocessOptions& options = {});

/// A remaining component packaged for a kernel.
struct ComponentJob {
  Graph graph;
  KernelInput input;
};

/// Components of the work graph that still have edges, with local ids
/// assigned in increasing work-id order.
std::vector<ComponentJob> extract_components(const WorkGraph& w);

/// partial + kernel_out plus the identical-class corrections of every live
/// representative.
ScoreVector finalize(const WorkGraph& w, const ScoreVector& partial, const ScoreVector& kernel_out);

/// "pass,iteration,changes,remaining_vertices,remaining_edges,component_edges"
/// with component edge counts joined by ';'.
void write_pass_stats_csv(std::ostream& os, std::span<const PassStats> stats);

}  // namespace bcs
