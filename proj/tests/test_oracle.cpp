#include <set>

#include "bcs/decompose.hpp"
#include "bcs/kernels.hpp"
#include "bcs/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bcs;
using namespace fixtures;

TEST_CASE("bc_naive on small graphs") {
  check_scores(bc_naive(path(4)), {0, 4, 4, 0});
  check_scores(bc_naive(cycle(4)), {1, 1, 1, 1});
  check_scores(bc_naive(make(4, {{0, 1}, {2, 3}})), {0, 0, 0, 0});
  check_scores(bc_naive(cycle(6)), {4, 4, 4, 4, 4, 4});
  CHECK_THROWS_AS(bc_naive(path(600)), OracleRefused);
  CHECK_NOTHROW(bc_naive(path(600), 600));
}

TEST_CASE("bc_tree closed form") {
  check_scores(bc_tree(make(3, {{0, 1}, {0, 2}})), {2, 0, 0});
  check_scores(bc_tree(path(4)), {0, 4, 4, 0});
  check_scores(bc_tree(star(4)), {12, 0, 0, 0, 0});
  CHECK_THROWS_AS(bc_tree(cycle(4)), std::invalid_argument);
  CHECK_THROWS_AS(bc_tree(make(4, {{0, 1}, {1, 2}, {0, 2}})), std::invalid_argument);
}

TEST_CASE("oracle agrees with Brandes on generated graphs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (Family f : {Family::kGnp, Family::kRandomTree, Family::kBridgedBlobs, Family::kPlantedIdentical,
                     Family::kPlantedSide, Family::kCliqueChain}) {
      const double param = (f == Family::kBridgedBlobs || f == Family::kCliqueChain) ? 4.0 : 0.15;
      const Graph g = generate({f, 64, param, seed});
      const auto naive = bc_naive(g);
      check_scores(bc_org(g), naive);
      double sum = 0;
      for (double x : naive) sum += x;
      CHECK(sum == doctest::Approx(interior_vertex_total(g)).epsilon(1e-9));
      if (f == Family::kRandomTree) check_scores(bc_tree(g), naive);
    }
  }
}

TEST_CASE("generator contracts") {
  SUBCASE("determinism") {
    GeneratorSpec spec{Family::kPlantedSide, 30, 0.2, 5};
    CHECK(generate(spec) == generate(spec));
    spec.seed = 6;
    CHECK_FALSE(generate(spec) == generate({Family::kPlantedSide, 30, 0.2, 5}));
  }
  SUBCASE("trees") {
    const Graph t = generate({Family::kRandomTree, 5, 0, 1});
    CHECK(t.num_edges() == 4);
    CHECK(connected_components(t).count == 1);
  }
  SUBCASE("complete gnp") { CHECK(generate({Family::kGnp, 8, 1.0, 1}) == complete(8)); }
  SUBCASE("bridged blobs have a bridge") {
    CHECK_FALSE(find_bridges(generate({Family::kBridgedBlobs, 12, 3, 1})).empty());
  }
  SUBCASE("clique chain has cut vertices") {
    const Graph g = generate({Family::kCliqueChain, 10, 4, 1});
    CHECK(articulation_vertices(g).size() == 2);
    CHECK(g.num_edges() == 6 + 6 + 6);
  }
  SUBCASE("planted identical has a type-I class") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Graph g = generate({Family::kPlantedIdentical, 20, 0.1, seed});
      std::set<std::vector<VertexId>> seen;
      bool found = false;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto run = g.neighbors(v);
        std::vector<VertexId> nb(run.begin(), run.end());
        if (nb.empty()) continue;
        found |= !seen.insert(nb).second;
      }
      CHECK(found);
    }
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(generate({Family::kGnp, 5, 1.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::kCliqueChain, 5, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::kBridgedBlobs, 5, 2.5, 1}), std::invalid_argument);
  }
}

TEST_CASE("generator spec strings") {
  auto spec = GeneratorSpec::parse("gnp:30:0.2:7");
  CHECK(spec.family == Family::kGnp);
  CHECK(spec.n == 30);
  CHECK(spec.param == 0.2);
  CHECK(spec.seed == 7);
  CHECK(GeneratorSpec::parse(spec.str()).str() == spec.str());
  CHECK(GeneratorSpec::parse("clique-chain:9").param == 4);
  CHECK_THROWS_AS(GeneratorSpec::parse("gnp"), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec::parse("lattice:4"), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec::parse("gnp:x:0.1"), std::invalid_argument);
}
