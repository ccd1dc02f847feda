#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcs/oracle.hpp"

namespace bcs {
namespace {

// std::mt19937_64 is fully specified by the standard; the distributions are
// not, so bounded draws are done by hand to keep corpora portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct Builder {
  VertexId n = 0;
  std::vector<Edge> edges;

  VertexId add_vertex() { return n++; }
  void add_edge(VertexId u, VertexId v) { edges.emplace_back(u, v); }

  void add_gnp(VertexId first, VertexId count, double p, Rng& rng) {
    for (VertexId i = 0; i < count; ++i)
      for (VertexId j = i + 1; j < count; ++j)
        if (rng.chance(p)) add_edge(first + i, first + j);
  }
  void add_clique(VertexId first, VertexId count) {
    for (VertexId i = 0; i < count; ++i)
      for (VertexId j = i + 1; j < count; ++j) add_edge(first + i, first + j);
  }

  /// Builds the graph under a random relabeling.
  Graph shuffled(Rng& rng) const {
    std::vector<VertexId> perm(n);
    for (VertexId i = 0; i < n; ++i) perm[i] = i;
    for (VertexId i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Edge> mapped;
    mapped.reserve(edges.size());
    for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(n, mapped);
  }
};

VertexId block_size(const GeneratorSpec& spec) {
  if (spec.param < 2 || spec.param != std::floor(spec.param))
    throw std::invalid_argument(std::string(family_name(spec.family)) + ": block size must be an integer >= 2");
  return static_cast<VertexId>(spec.param);
}

void require_probability(const GeneratorSpec& spec) {
  if (!(spec.param >= 0.0 && spec.param <= 1.0))
    throw std::invalid_argument(std::string(family_name(spec.family)) + ": edge probability must be in [0, 1]");
}

Graph random_tree(VertexId n, Rng& rng) {
  Builder b;
  b.n = n;
  for (VertexId v = 1; v < n; ++v) b.add_edge(v, static_cast<VertexId>(rng.below(v)));
  return b.shuffled(rng);
}

Graph bridged_blobs(VertexId n, VertexId block, Rng& rng) {
  if (n < 2 * block) throw std::invalid_argument("bridged-blobs: n must be at least twice the block size");
  Builder b;
  b.n = n;
  const VertexId blobs = n / block;
  std::vector<VertexId> start(blobs + 1);
  for (VertexId i = 0; i <= blobs; ++i) start[i] = i * block;
  start[blobs] = n;  // the last blob absorbs the remainder
  for (VertexId i = 0; i < blobs; ++i) {
    const VertexId size = start[i + 1] - start[i];
    // A cycle plus random chords keeps every blob two-edge-connected.
    if (size <= 4) {
      b.add_clique(start[i], size);
    } else {
      for (VertexId k = 0; k < size; ++k) b.add_edge(start[i] + k, start[i] + (k + 1) % size);
      b.add_gnp(start[i], size, 0.3, rng);
    }
    if (i > 0) {
      const VertexId other = static_cast<VertexId>(rng.below(i));
      const VertexId u = start[i] + static_cast<VertexId>(rng.below(size));
      const VertexId v = start[other] + static_cast<VertexId>(rng.below(start[other + 1] - start[other]));
      b.add_edge(u, v);
    }
  }
  return b.shuffled(rng);
}

Graph planted_identical(VertexId n, double p, Rng& rng) {
  if (n < 4) throw std::invalid_argument("planted-identical: n must be at least 4");
  const VertexId clones = std::max<VertexId>(1, n / 10);
  const VertexId base = n - clones - 1;
  Builder b;
  b.n = base;
  b.add_gnp(0, base, p, rng);
  b.add_edge(0, 1);
  auto neighbors_of = [&](VertexId x) {
    std::vector<VertexId> out;
    for (auto [u, v] : b.edges) {
      if (u == x) out.push_back(v);
      if (v == x) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  // Type-I clones of one vertex, then a type-II twin of another.
  const VertexId x = static_cast<VertexId>(rng.below(base));
  const auto nx = neighbors_of(x);
  for (VertexId c = 0; c < clones; ++c) {
    const VertexId y = b.add_vertex();
    for (VertexId u : nx) b.add_edge(y, u);
  }
  if (nx.empty()) {
    // x is isolated; give the class a common neighbor.
    const VertexId hub = x == 0 ? 1 : 0;
    b.add_edge(x, hub);
    for (VertexId c = 0; c < clones; ++c) b.add_edge(base + c, hub);
  }
  const VertexId z = static_cast<VertexId>(rng.below(base));
  const auto nz = neighbors_of(z);
  const VertexId twin = b.add_vertex();
  b.add_edge(twin, z);
  for (VertexId u : nz) b.add_edge(twin, u);
  return b.shuffled(rng);
}

Graph planted_side(VertexId n, double p, Rng& rng) {
  if (n < 4) throw std::invalid_argument("planted-side: n must be at least 4");
  const VertexId extra = std::max<VertexId>(1, n / 5);
  const VertexId base = n - extra;
  Builder b;
  b.n = base;
  b.add_gnp(0, base, p, rng);
  b.add_edge(0, 1);
  for (VertexId k = 0; k < extra; ++k) {
    const VertexId s = b.add_vertex();
    // Attach to the endpoints of an existing edge (a triangle) or, one time in
    // four, to a single vertex.
    const Edge e = b.edges[rng.below(b.edges.size())];
    if (rng.below(4) == 0) {
      b.add_edge(s, e.first);
    } else {
      b.add_edge(s, e.first);
      b.add_edge(s, e.second);
    }
  }
  return b.shuffled(rng);
}

Graph clique_chain(VertexId n, VertexId block, Rng& rng) {
  if (n < block) throw std::invalid_argument("clique-chain: n must be at least the block size");
  Builder b;
  b.n = n;
  // Consecutive cliques share one vertex; the tail clique may be smaller.
  VertexId first = 0;
  while (first + 1 < n) {
    const VertexId last = std::min(n - 1, first + block - 1);
    b.add_clique(first, last - first + 1);
    first = last;
  }
  return b.shuffled(rng);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kGnp: return "gnp";
    case Family::kRandomTree: return "random-tree";
    case Family::kBridgedBlobs: return "bridged-blobs";
    case Family::kPlantedIdentical: return "planted-identical";
    case Family::kPlantedSide: return "planted-side";
    case Family::kCliqueChain: return "clique-chain";
  }
  return "?";
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in{std::string(text)};
  while (std::getline(in, field, ':')) fields.push_back(field);
  if (fields.size() < 2 || fields.size() > 4)
    throw std::invalid_argument("generator spec must look like family:n[:param[:seed]], got \"" +
                                std::string(text) + "\"");

  GeneratorSpec spec;
  bool known = false;
  for (Family f : {Family::kGnp, Family::kRandomTree, Family::kBridgedBlobs, Family::kPlantedIdentical,
                   Family::kPlantedSide, Family::kCliqueChain}) {
    if (family_name(f) == fields[0]) {
      spec.family = f;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown generator family \"" + fields[0] + "\"");

  auto to_u64 = [&](const std::string& s, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument(std::string("bad ") + what + " \"" + s + "\" in generator spec");
    return value;
  };
  const std::uint64_t n = to_u64(fields[1], "vertex count");
  if (n > 0xFFFFFFF0u) throw std::invalid_argument("vertex count too large");
  spec.n = static_cast<VertexId>(n);

  switch (spec.family) {
    case Family::kBridgedBlobs:
    case Family::kCliqueChain: spec.param = 4; break;
    case Family::kRandomTree: spec.param = 0; break;
    default: spec.param = 0.2; break;
  }
  if (fields.size() >= 3) {
    try {
      std::size_t used = 0;
      spec.param = std::stod(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad parameter \"" + fields[2] + "\" in generator spec");
    }
  }
  if (fields.size() == 4) spec.seed = to_u64(fields[3], "seed");
  return spec;
}

std::string GeneratorSpec::str() const {
  std::ostringstream os;
  os << family_name(family) << ':' << n << ':' << param << ':' << seed;
  return os.str();
}

Graph generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::kGnp: {
      require_probability(spec);
      Builder b;
      b.n = spec.n;
      b.add_gnp(0, spec.n, spec.param, rng);
      return Graph::from_edges(b.n, b.edges);
    }
    case Family::kRandomTree: return random_tree(spec.n, rng);
    case Family::kBridgedBlobs: return bridged_blobs(spec.n, block_size(spec), rng);
    case Family::kPlantedIdentical: require_probability(spec); return planted_identical(spec.n, spec.param, rng);
    case Family::kPlantedSide: require_probability(spec); return planted_side(spec.n, spec.param, rng);
    case Family::kCliqueChain: return clique_chain(spec.n, block_size(spec), rng);
  }
  throw std::invalid_argument("unknown generator family");
}

}  // namespace bcs
