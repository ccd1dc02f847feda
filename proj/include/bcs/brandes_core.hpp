#pragma once

// Single-source Brandes machinery shared by the kernels and the side-vertex
// pass. Templated on the adjacency type so it runs both on the immutable CSR
// graph and on the mutable work graph.

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

struct KernelTimings {
  double phase1_seconds = 0.0;
  double phase2_seconds = 0.0;
  std::uint64_t sources = 0;

  KernelTimings& operator+=(const KernelTimings& o) {
    phase1_seconds += o.phase1_seconds;
    phase2_seconds += o.phase2_seconds;
    sources += o.sources;
    return *this;
  }
};

/// Per-source working set. Sized once for a vertex bound and reused; only the
/// vertices touched by the previous source are reset.
struct BfsState {
  std::vector<double> sigma;
  std::vector<std::int32_t> dist;
  std::vector<std::vector<VertexId>> preds;
  std::vector<double> delta;
  /// BFS queue; read backwards it is the back-propagation stack.
  std::vector<VertexId> order;

  BfsState() = default;
  explicit BfsState(VertexId bound) { resize(bound); }

  void resize(VertexId bound) {
    if (bound <= sigma.size()) return;
    sigma.resize(bound, 0.0);
    dist.resize(bound, -1);
    preds.resize(bound);
    delta.resize(bound, 0.0);
    order.reserve(bound);
  }

  void reset_visited() {
    for (VertexId v : order) {
      sigma[v] = 0.0;
      dist[v] = -1;
      preds[v].clear();
      delta[v] = 0.0;
    }
    order.clear();
  }
};

namespace detail {

/// Vertex multiplicities seen by a kernel. Disabled attributes are the
/// constant 1 and cost nothing.
template <bool kReach, bool kIdent>
struct Weights {
  std::span<const double> reach_values;
  std::span<const double> ident_values;

  double reach(VertexId v) const {
    if constexpr (kReach) return reach_values[v];
    else return 1.0;
  }
  double ident(VertexId v) const {
    if constexpr (kIdent) return ident_values[v];
    else return 1.0;
  }
};

/// Forward BFS from s: distances, path counts and predecessor lists. With
/// identical-vertex classes an edge out of a non-source representative
/// carries ident(v) parallel paths.
template <bool kReach, bool kIdent, class Adjacency>
void count_paths(const Adjacency& g, VertexId s, const Weights<kReach, kIdent>& w, BfsState& st) {
  st.dist[s] = 0;
  st.sigma[s] = 1.0;
  st.order.push_back(s);
  for (std::size_t head = 0; head < st.order.size(); ++head) {
    const VertexId v = st.order[head];
    const std::int32_t next = st.dist[v] + 1;
    double forwarded = st.sigma[v];
    if constexpr (kIdent) {
      if (v != s) forwarded = st.sigma[v] * w.ident(v);
    }
    g.for_each_neighbor(v, [&](VertexId u) {
      if (st.dist[u] < 0) {
        st.dist[u] = next;
        st.order.push_back(u);
      }
      if (st.dist[u] == next) {
        st.sigma[u] += forwarded;
        st.preds[u].push_back(v);
      }
    });
  }
}

/// Back-propagation of dependencies. delta starts at reach(v) - 1, the
/// targets hidden behind v; successors with ident(u) members contribute
/// ident(u) times.
template <bool kReach, bool kIdent>
void propagate_dependencies(const Weights<kReach, kIdent>& w, BfsState& st) {
  if constexpr (kReach) {
    for (VertexId v : st.order) st.delta[v] = w.reach(v) - 1.0;
  }
  for (std::size_t i = st.order.size(); i-- > 0;) {
    const VertexId u = st.order[i];
    const double sigma_u = st.sigma[u];
    double carried = 1.0 + st.delta[u];
    if constexpr (kIdent) carried = w.ident(u) * (1.0 + st.delta[u]);
    for (VertexId v : st.preds[u]) st.delta[v] += st.sigma[v] / sigma_u * carried;
  }
}

/// Runs one source and calls accumulate(w, delta_w) for every reached w != s.
template <bool kReach, bool kIdent, class Adjacency, class Accumulate>
void run_source(const Adjacency& g, VertexId s, const Weights<kReach, kIdent>& w, BfsState& st,
                KernelTimings* timings, Accumulate&& accumulate) {
  using Clock = std::chrono::steady_clock;
  if (timings) {
    auto t0 = Clock::now();
    count_paths(g, s, w, st);
    auto t1 = Clock::now();
    propagate_dependencies(w, st);
    for (VertexId v : st.order)
      if (v != s) accumulate(v, st.delta[v]);
    auto t2 = Clock::now();
    timings->phase1_seconds += std::chrono::duration<double>(t1 - t0).count();
    timings->phase2_seconds += std::chrono::duration<double>(t2 - t1).count();
    ++timings->sources;
  } else {
    count_paths(g, s, w, st);
    propagate_dependencies(w, st);
    for (VertexId v : st.order)
      if (v != s) accumulate(v, st.delta[v]);
  }
  st.reset_visited();
}

/// All-sources kernel. Returns per-vertex scores in local ids; the source
/// multiplicity is reach(s) * ident(s).
template <bool kReach, bool kIdent, class Adjacency>
std::vector<double> all_sources(const Adjacency& g, const Weights<kReach, kIdent>& w,
                                KernelTimings* timings) {
  const VertexId n = g.vertex_bound();
  std::vector<double> local(n, 0.0);
  BfsState st(n);
  for (VertexId s = 0; s < n; ++s) {
    if constexpr (kReach || kIdent) {
      const double mult = w.reach(s) * w.ident(s);
      run_source(g, s, w, st, timings, [&](VertexId v, double d) { local[v] += mult * d; });
    } else {
      run_source(g, s, w, st, timings, [&](VertexId v, double d) { local[v] += d; });
    }
  }
  return local;
}

}  // namespace detail
}  // namespace bcs
