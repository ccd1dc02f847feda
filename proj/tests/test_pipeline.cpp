#include <algorithm>
#include <map>
#include <sstream>

#include "bcs/oracle.hpp"
#include "bcs/pipeline.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bcs;
using namespace fixtures;

TEST_CASE("combination strings") {
  CHECK(Combination::parse("odbasi").str() == "odbasi");
  CHECK(Combination::parse("").techniques().empty());
  CHECK(Combination::parse("sd").techniques() == std::vector<Technique>{Technique::kSide, Technique::kDegree1});
  CHECK(Combination::parse("odb").has(Technique::kBridge));
  CHECK_FALSE(Combination::parse("odb").has(Technique::kSide));
  CHECK_THROWS_AS(Combination::parse("odx"), std::invalid_argument);
  CHECK_THROWS_AS(Combination::parse("odd"), std::invalid_argument);
  std::vector<std::string> names;
  for (const auto& c : Combination::standard_set()) names.push_back(c.str());
  CHECK(names == std::vector<std::string>{"o", "od", "odb", "odba", "odbas", "odbai", "odbasi"});
}

TEST_CASE("preprocess on small graphs") {
  SUBCASE("path of three under od") {
    auto r = preprocess(path(3), Combination::parse("od"));
    CHECK(r.work.num_live_vertices() == 0);
    check_scores(r.partial, {0, 2, 0});
  }
  SUBCASE("K4 under odba is untouched") {
    auto r = preprocess(complete(4), Combination::parse("odba"));
    CHECK(r.work.num_live_edges() == 6);
    check_scores(r.partial, {0, 0, 0, 0});
    CHECK(r.iterations == 1);
  }
  SUBCASE("only ordering leaves unit attributes") {
    auto r = preprocess(toy_network(), Combination::parse("o"));
    CHECK(r.work.num_live_edges() == toy_network().num_edges());
    CHECK(r.stats.empty());
  }
  SUBCASE("statistics record every pass of every iteration") {
    auto r = preprocess(toy_network(), Combination::parse("odbasi"));
    CHECK(r.stats.size() == 5 * static_cast<std::size_t>(r.iterations));
    CHECK(r.stats.front().pass == "d");
    CHECK(r.stats.back().changes == 0);
    std::ostringstream os;
    write_pass_stats_csv(os, r.stats);
    CHECK(os.str().rfind("pass,iteration,changes,remaining_vertices,remaining_edges,component_edges\nd,1,", 0) == 0);
  }
}

TEST_CASE("every combination matches the oracle on named graphs") {
  const std::vector<Graph> graphs{path(4),     cycle(4), cycle(7),       complete(5),
                                  star(4),     barbell(), toy_network(), merge_exposes_cut_vertex(),
                                  make(4, {{0, 1}, {2, 3}}), Graph::from_edges(3, std::vector<Edge>{})};
  const char* combos[] = {"", "o", "od", "odb", "odba", "odbas", "odbai", "odbasi", "i", "s", "is", "ia", "abdsi"};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto want = bc_naive(graphs[i]);
    for (const char* c : combos) {
      INFO("graph " << i << " combo '" << c << "'");
      check_scores(compute_betweenness(graphs[i], Combination::parse(c)).scores, want);
    }
  }
}

TEST_CASE("fixed point: passes report nothing left to do") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    for (Family f : {Family::kGnp, Family::kPlantedIdentical, Family::kPlantedSide, Family::kBridgedBlobs}) {
      const Graph g = generate({f, 40, f == Family::kBridgedBlobs ? 4.0 : 0.12, seed});
      auto r = preprocess(g, Combination::parse("odbasi"));
      ScoreVector scratch(g.num_vertices(), 0.0);
      CHECK(remove_degree1(r.work, scratch) == 0);
      CHECK(remove_bridges(r.work, scratch) == 0);
      CHECK(shatter_articulation(r.work) == 0);
      CHECK(remove_side_vertices(r.work, scratch) == 0);
      CHECK(merge_identical(r.work) == 0);
    }
  }
}

TEST_CASE("no pass grows the graph") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = generate({Family::kPlantedSide, 50, 0.1, seed});
    VertexId vertices = g.num_vertices();
    std::size_t edges = g.num_edges();
    BcOptions options;
    options.after_pass = [&](const PassStats& s, const WorkGraph&) {
      // Shattering adds copies but never edges.
      if (s.pass != "a") CHECK(s.remaining_vertices <= vertices);
      CHECK(s.remaining_edges <= edges);
      vertices = s.remaining_vertices;
      edges = s.remaining_edges;
    };
    compute_betweenness(g, Combination::parse("odbasi"), options);
  }
}

TEST_CASE("seeded ordering start changes nothing in the scores") {
  const Graph g = generate({Family::kGnp, 60, 0.08, 3});
  const auto base = compute_betweenness(g, Combination::parse("odbasi")).scores;
  BcOptions options;
  options.order_seed = 99;
  check_scores(compute_betweenness(g, Combination::parse("odbasi"), options).scores, base);
  options.order_start = 17;
  check_scores(compute_betweenness(g, Combination::parse("odbasi"), options).scores, base);
  options.order_start = 1000;
  CHECK_THROWS_AS(compute_betweenness(g, Combination::parse("o"), options), std::invalid_argument);
}

TEST_CASE("result bookkeeping") {
  const Graph g = generate({Family::kCliqueChain, 40, 4, 1});
  auto plain = compute_betweenness(g, Combination::parse("o"));
  CHECK(plain.remaining_edges == g.num_edges());
  CHECK(plain.component_edges == std::vector<std::size_t>{g.num_edges()});
  CHECK(plain.kernel_uses[static_cast<int>(KernelKind::kPlain)] == 1);
  CHECK(plain.total_seconds >= plain.phase1_seconds + plain.phase2_seconds);

  auto shattered = compute_betweenness(g, Combination::parse("odba"));
  CHECK(shattered.component_edges.size() == 13);
  CHECK(shattered.kernel_uses[static_cast<int>(KernelKind::kReach)] == 13);

  auto gone = compute_betweenness(g, Combination::parse("odbas"));
  CHECK(gone.remaining_edges == 0);
  CHECK(gone.component_edges.empty());
}
