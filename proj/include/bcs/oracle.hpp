#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bcs/graph.hpp"
#include "bcs/kernels.hpp"

namespace bcs {

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr VertexId kNaiveCap = 512;

/// Betweenness straight from the pair-dependency definition, using all-pairs
/// distance and path-count matrices. O(n^3); refuses graphs above `cap`.
ScoreVector bc_naive(const Graph& g, VertexId cap = kNaiveCap);

/// Closed form for trees: (n-1)^2 - sum of squared branch sizes at v. Throws
/// std::invalid_argument unless g is a tree.
ScoreVector bc_tree(const Graph& g);

/// Sum over ordered connected pairs (s, t), s != t, of d(s,t) - 1, which equals
/// the sum of all betweenness scores.
double interior_vertex_total(const Graph& g);

// ---------------------------------------------------------------------------
// Generators

enum class Family { kGnp, kRandomTree, kBridgedBlobs, kPlantedIdentical, kPlantedSide, kCliqueChain };

std::string_view family_name(Family f);

struct GeneratorSpec {
  Family family = Family::kGnp;
  VertexId n = 0;
  /// Edge probability (gnp, planted-*) or block size (bridged-blobs,
  /// clique-chain); ignored by random-tree.
  double param = 0.0;
  std::uint64_t seed = 1;

  /// "family:n[:param[:seed]]", e.g. "gnp:30:0.2:7".
  static GeneratorSpec parse(std::string_view text);
  std::string str() const;
};

/// Deterministic for a given spec. Throws std::invalid_argument on bad
/// parameters.
Graph generate(const GeneratorSpec& spec);

}  // namespace bcs
