#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bcs {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Items dropped or repaired while turning raw input into a simple graph.
struct NormalizationReport {
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
  /// Directed adjacency entries whose reverse was missing (METIS input only).
  std::size_t asymmetric_arcs = 0;

  bool clean() const { return self_loops == 0 && duplicate_edges == 0 && asymmetric_arcs == 0; }
};

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Every undirected edge is stored in both directions and each vertex's
/// neighbor run is sorted ascending. Construction always normalizes: self
/// loops are dropped and parallel edges collapsed.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds from undirected edge pairs. Ids must be < n.
  static Graph from_edges(VertexId n, std::span<const Edge> edges,
                          NormalizationReport* report = nullptr);

  /// Builds from directed adjacency entries, symmetrizing as needed. A pair
  /// listed in both directions counts as a single edge.
  static Graph from_arcs(VertexId n, std::span<const Edge> arcs,
                         NormalizationReport* report = nullptr);

  VertexId num_vertices() const { return static_cast<VertexId>(offsets_.size() - 1); }
  std::size_t num_edges() const { return neighbors_.size() / 2; }
  VertexId vertex_bound() const { return num_vertices(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  VertexId degree(VertexId v) const {
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(VertexId u, VertexId v) const;

  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) f(neighbors_[i]);
  }

  const std::vector<std::size_t>& offsets() const { return offsets_; }
  const std::vector<VertexId>& adjacency() const { return neighbors_; }

  /// Each undirected edge once, as (u, v) with u < v, in CSR order.
  std::vector<Edge> edge_list() const;

  bool operator==(const Graph&) const = default;

 private:
  Graph(std::vector<std::size_t> offsets, std::vector<VertexId> neighbors)
      : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}

  static Graph from_sorted_arcs(VertexId n, std::vector<Edge> arcs);

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
};

/// Bijection old id -> new id together with its inverse.
struct VertexPermutation {
  std::vector<VertexId> forward;
  std::vector<VertexId> inverse;

  static VertexPermutation identity(VertexId n);
  static VertexPermutation from_forward(std::vector<VertexId> forward);

  VertexId size() const { return static_cast<VertexId>(forward.size()); }
  VertexPermutation inverted() const { return {inverse, forward}; }
  bool valid() const;
};

/// Relabels vertices by BFS dequeue rank starting from `start`. Neighbors are
/// visited in ascending order; unreached components continue from the lowest
/// unvisited id.
VertexPermutation bfs_order(const Graph& g, VertexId start = 0);

/// Graph with edge {p.forward[u], p.forward[v]} for every edge {u, v} of g.
Graph relabel(const Graph& g, const VertexPermutation& p);

struct ComponentLabels {
  std::vector<VertexId> label;
  VertexId count = 0;
};

/// Labels are contiguous from 0, assigned in order of each component's
/// lowest vertex id.
ComponentLabels connected_components(const Graph& g);

}  // namespace bcs
