#include "bcs/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bcs {
namespace {

void require_positive(std::span<const double> values, const char* what, VertexId n) {
  if (values.size() != n) throw std::invalid_argument(std::string(what) + ": size mismatch");
  for (double x : values) {
    if (!(x >= 1.0)) throw std::invalid_argument(std::string(what) + " values must be >= 1");
  }
}

void require_targets(std::size_t size, VertexId n) {
  if (size != n) throw std::invalid_argument("target map size mismatch");
}

template <bool kReach, bool kIdent>
std::vector<double> run(const Graph& g, std::span<const double> reach, std::span<const double> ident,
                        KernelTimings* timings) {
  detail::Weights<kReach, kIdent> w{reach, ident};
  return detail::all_sources(g, w, timings);
}

void scatter(const std::vector<double>& local, std::span<const VertexId> org, ScoreVector& out) {
  for (VertexId v = 0; v < local.size(); ++v) out.at(org[v]) += local[v];
}

void scatter(const std::vector<double>& local, std::span<const std::vector<VertexId>> classes,
             ScoreVector& out) {
  for (VertexId v = 0; v < local.size(); ++v)
    for (VertexId t : classes[v]) out.at(t) += local[v];
}

}  // namespace

ScoreVector bc_org(const Graph& g, KernelTimings* timings) {
  return run<false, false>(g, {}, {}, timings);
}

void bc_reach(const Graph& g, std::span<const double> reach, std::span<const VertexId> org,
              ScoreVector& out, KernelTimings* timings) {
  require_positive(reach, "reach", g.num_vertices());
  require_targets(org.size(), g.num_vertices());
  scatter(run<true, false>(g, reach, {}, timings), org, out);
}

void bc_ident(const Graph& g, std::span<const double> ident,
              std::span<const std::vector<VertexId>> classes, ScoreVector& out,
              KernelTimings* timings) {
  require_positive(ident, "ident", g.num_vertices());
  require_targets(classes.size(), g.num_vertices());
  scatter(run<false, true>(g, {}, ident, timings), classes, out);
}

void bc_reach_ident(const Graph& g, std::span<const double> reach, std::span<const double> ident,
                    std::span<const std::vector<VertexId>> classes, ScoreVector& out,
                    KernelTimings* timings) {
  require_positive(reach, "reach", g.num_vertices());
  require_positive(ident, "ident", g.num_vertices());
  require_targets(classes.size(), g.num_vertices());
  scatter(run<true, true>(g, reach, ident, timings), classes, out);
}

std::string_view kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::kPlain: return "plain";
    case KernelKind::kReach: return "reach";
    case KernelKind::kIdent: return "ident";
    case KernelKind::kReachIdent: return "reach+ident";
  }
  return "?";
}

KernelKind select_kernel(std::span<const double> reach, std::span<const double> ident) {
  const bool any_reach = std::any_of(reach.begin(), reach.end(), [](double r) { return r != 1.0; });
  const bool any_ident = std::any_of(ident.begin(), ident.end(), [](double i) { return i != 1.0; });
  if (any_reach && any_ident) return KernelKind::kReachIdent;
  if (any_reach) return KernelKind::kReach;
  if (any_ident) return KernelKind::kIdent;
  return KernelKind::kPlain;
}

KernelKind run_kernel(const Graph& g, const KernelInput& input, ScoreVector& out,
                      KernelTimings* timings) {
  const KernelKind kind = select_kernel(input.reach, input.ident);
  switch (kind) {
    case KernelKind::kPlain:
      scatter(run<false, false>(g, {}, {}, timings), input.targets, out);
      break;
    case KernelKind::kReach:
      scatter(run<true, false>(g, input.reach, {}, timings), input.targets, out);
      break;
    case KernelKind::kIdent:
      scatter(run<false, true>(g, {}, input.ident, timings), input.targets, out);
      break;
    case KernelKind::kReachIdent:
      scatter(run<true, true>(g, input.reach, input.ident, timings), input.targets, out);
      break;
  }
  return kind;
}

void bfs_side(const Graph& g, VertexId s, std::span<const double> reach,
              std::span<const VertexId> org, ScoreVector& out) {
  require_positive(reach, "reach", g.num_vertices());
  require_targets(org.size(), g.num_vertices());
  if (s >= g.num_vertices()) throw std::out_of_range("bfs_side: source out of range");
  detail::Weights<true, false> w{reach, {}};
  BfsState st(g.num_vertices());
  const double rs = reach[s];
  detail::run_source(g, s, w, st, nullptr, [&](VertexId v, double d) {
    out.at(org[v]) += rs * d + rs * (d - (reach[v] - 1.0));
  });
}

}  // namespace bcs
