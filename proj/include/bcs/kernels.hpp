#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "bcs/brandes_core.hpp"
#include "bcs/graph.hpp"

namespace bcs {

/// Betweenness scores indexed by original vertex id. Ordered-pair convention:
/// every unordered pair {s, t} contributes twice.
using ScoreVector = std::vector<double>;

/// Plain Brandes over every source.
ScoreVector bc_org(const Graph& g, KernelTimings* timings = nullptr);

/// Brandes with reach attributes. Adds the score of every vertex v of g to
/// out[org[v]]. Throws std::invalid_argument if some reach is below 1.
void bc_reach(const Graph& g, std::span<const double> reach, std::span<const VertexId> org,
              ScoreVector& out, KernelTimings* timings = nullptr);

/// Brandes on a graph whose vertices stand for ident(v) identical vertices.
/// The score of v is added to out[t] for every t in classes[v]. Paths between
/// two members of one class are not counted here; see finalize().
void bc_ident(const Graph& g, std::span<const double> ident,
              std::span<const std::vector<VertexId>> classes, ScoreVector& out,
              KernelTimings* timings = nullptr);

/// Both attributes at once: ident multiplies path counts and sources, reach
/// seeds every per-member dependency with the reach(v) - 1 hidden targets.
void bc_reach_ident(const Graph& g, std::span<const double> reach, std::span<const double> ident,
                    std::span<const std::vector<VertexId>> classes, ScoreVector& out,
                    KernelTimings* timings = nullptr);

enum class KernelKind { kPlain, kReach, kIdent, kReachIdent };

std::string_view kernel_name(KernelKind kind);

/// The cheapest kernel that is exact for these attributes.
KernelKind select_kernel(std::span<const double> reach, std::span<const double> ident);

/// Attributes and score destinations of one graph handed to a kernel.
struct KernelInput {
  std::vector<double> reach;
  std::vector<double> ident;
  /// Original ids that receive each vertex's score.
  std::vector<std::vector<VertexId>> targets;
};

/// Dispatches to one of the four kernels and accumulates into out.
KernelKind run_kernel(const Graph& g, const KernelInput& input, ScoreVector& out,
                      KernelTimings* timings = nullptr);

/// Compensation BFS for removing side vertex s. For every reached w != s adds
/// reach(s)*delta(w) + reach(s)*(delta(w) - (reach(w) - 1)) to out[org[w]].
/// The caller guarantees that the neighborhood of s induces a clique.
void bfs_side(const Graph& g, VertexId s, std::span<const double> reach,
              std::span<const VertexId> org, ScoreVector& out);

}  // namespace bcs
