#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

/// How the members folded into a representative relate to each other.
enum class ClassKind : std::uint8_t {
  kSingle,  ///< ident == 1
  kTypeI,   ///< same open neighborhood, pairwise non-adjacent
  kTypeII,  ///< same closed neighborhood, pairwise adjacent
};

/// Mutable reduced graph manipulated by the preprocessing passes.
///
/// A work vertex stands for reach(v) original vertices in its component
/// (itself plus the ones hidden behind it) and, after identical-vertex
/// merging, for ident(v) interchangeable copies of that. Its mass in the
/// component is reach(v) * ident(v). members(v) lists the original ids that
/// receive the score of one copy.
///
/// Deleted vertices are tombstoned: neighbor lists may still mention them
/// until compact() runs, and every accessor below skips them.
class WorkGraph {
 public:
  static constexpr VertexId kNone = ~VertexId{0};

  WorkGraph() = default;
  explicit WorkGraph(const Graph& g);

  VertexId vertex_bound() const { return static_cast<VertexId>(org_.size()); }
  VertexId original_vertex_count() const { return original_n_; }

  bool alive(VertexId v) const { return alive_[v] != 0; }
  VertexId org(VertexId v) const { return org_[v]; }
  std::uint64_t reach(VertexId v) const { return reach_[v]; }
  std::uint64_t ident(VertexId v) const { return ident_[v]; }
  std::uint64_t mass(VertexId v) const { return reach_[v] * ident_[v]; }
  ClassKind kind(VertexId v) const { return kind_[v]; }
  const std::vector<VertexId>& members(VertexId v) const { return members_[v]; }

  VertexId degree(VertexId v) const { return degree_[v]; }
  VertexId num_live_vertices() const { return live_vertices_; }
  std::size_t num_live_edges() const { return live_arcs_ / 2; }

  /// Raw neighbor list, sorted, possibly containing tombstoned vertices.
  std::span<const VertexId> raw_neighbors(VertexId v) const { return adj_[v]; }

  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    for (VertexId w : adj_[v])
      if (alive_[w]) f(w);
  }

  std::vector<VertexId> live_neighbors(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;

  void add_reach(VertexId v, std::uint64_t amount) { reach_[v] += amount; }
  void set_reach(VertexId v, std::uint64_t value) { reach_[v] = value; }

  /// Tombstones v and detaches it from its neighbors' live degrees.
  void remove_vertex(VertexId v);

  /// Removes the given live edges.
  void remove_edges(std::span<const Edge> edges);

  /// New isolated single vertex that is another local copy of org(of).
  VertexId add_copy(VertexId of, std::uint64_t reach);

  /// Replaces every adjacency list with the given edge set over live vertices.
  void reset_edges(std::span<const Edge> edges);

  /// Folds `other` into `rep` as identical vertices of the given kind.
  /// Both must have equal reach. `other` is deleted.
  void fold_into(VertexId rep, VertexId other, ClassKind kind);

  /// Drops tombstoned entries from all neighbor lists.
  void compact();

  struct Components {
    std::vector<VertexId> label;     ///< kNone for dead vertices
    std::vector<std::uint64_t> mass; ///< sum of reach * ident per component
    std::vector<std::size_t> edges;  ///< live edges per component
    VertexId count = 0;
  };
  Components components() const;

  /// Live vertices in increasing id order.
  std::vector<VertexId> live_vertices() const;

 private:
  VertexId original_n_ = 0;
  std::vector<VertexId> org_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::uint64_t> ident_;
  std::vector<ClassKind> kind_;
  std::vector<std::vector<VertexId>> members_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> degree_;
  VertexId live_vertices_ = 0;
  std::size_t live_arcs_ = 0;
};

}  // namespace bcs
