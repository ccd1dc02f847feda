#pragma once

#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>

#include "bcs/graph.hpp"
#include "bcs/kernels.hpp"
#include "doctest.h"

namespace fixtures {

using bcs::Edge;
using bcs::Graph;
using bcs::VertexId;

inline Graph make(VertexId n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return Graph::from_edges(n, e);
}

inline Graph path(VertexId n) {
  std::vector<Edge> e;
  for (VertexId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(VertexId n) {
  std::vector<Edge> e;
  for (VertexId v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete(VertexId n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

/// Center 0, leaves 1..k.
inline Graph star(VertexId k) {
  std::vector<Edge> e;
  for (VertexId v = 1; v <= k; ++v) e.emplace_back(0, v);
  return Graph::from_edges(k + 1, e);
}

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge {2,3}.
inline Graph barbell() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}); }

// The 11-person toy network of the shattering example. Arthur is the only
// articulation vertex; Jack hangs off him alone.
enum Toy : VertexId { Arthur, John, Sue, Amy, May, Jack, Wayne, Henry, Diana, Martin, Xena, kToySize };

inline Graph toy_network() {
  return make(kToySize, {{Arthur, John}, {Arthur, Sue}, {Amy, John}, {Amy, Sue}, {May, John}, {May, Sue},
                         {Arthur, Jack}, {Arthur, Wayne}, {Arthur, Henry}, {Wayne, Henry}, {Diana, Wayne},
                         {Diana, Henry}, {Martin, Henry}, {Xena, Arthur}, {Xena, Wayne}, {Xena, Henry}});
}

/// Vertices 1..8 relabeled to 0..7: 1 and 8 share the neighborhood
/// {2, 4, 6, 7}; 2-3, 4-5 and 6-7 are edges.
inline Graph merge_exposes_cut_vertex() {
  return make(8, {{0, 1}, {0, 3}, {0, 5}, {0, 6}, {7, 1}, {7, 3}, {7, 5}, {7, 6}, {1, 2}, {3, 4}, {5, 6}});
}

inline void check_scores(const bcs::ScoreVector& got, const bcs::ScoreVector& want, double tol = 1e-9) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    INFO("vertex " << i << ": got " << got[i] << ", want " << want[i]);
    CHECK(std::fabs(got[i] - want[i]) <= tol * std::max(1.0, std::fabs(want[i])));
  }
}

}  // namespace fixtures
