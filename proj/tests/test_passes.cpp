#include <algorithm>

#include "bcs/decompose.hpp"
#include "bcs/kernels.hpp"
#include "bcs/oracle.hpp"
#include "bcs/reduce.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bcs;
using namespace fixtures;

namespace {

/// Kernels over whatever is left, then reassembly.
ScoreVector finish(const WorkGraph& w, const ScoreVector& partial) {
  ScoreVector kernel_out(partial.size(), 0.0);
  for (const auto& job : extract_components(w)) run_kernel(job.graph, job.input, kernel_out);
  return finalize(w, partial, kernel_out);
}

}  // namespace

TEST_CASE("block decomposition") {
  CHECK(find_bridges(path(3)) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(find_bridges(barbell()) == std::vector<Edge>{{2, 3}});
  CHECK(find_bridges(cycle(5)).empty());
  CHECK(articulation_vertices(barbell()) == std::vector<VertexId>{2, 3});
  CHECK(articulation_vertices(toy_network()) == std::vector<VertexId>{Toy::Arthur, Toy::Henry});
  CHECK(biconnected_blocks(toy_network()).blocks.size() == 4);
  CHECK(articulation_vertices(complete(4)).empty());
}

TEST_CASE("degree-1 removal") {
  SUBCASE("path of three cascades away completely") {
    WorkGraph w(path(3));
    ScoreVector out(3, 0.0);
    CHECK(remove_degree1(w, out) == 3);
    check_scores(out, {0, 2, 0});
    CHECK(w.num_live_vertices() == 0);
  }
  SUBCASE("isolated edge keeps no score") {
    WorkGraph w(path(2));
    ScoreVector out(2, 0.0);
    remove_degree1(w, out);
    check_scores(out, {0, 0});
  }
  SUBCASE("star leaves pile onto the center") {
    WorkGraph w(star(4));
    ScoreVector out(5, 0.0);
    remove_degree1(w, out);
    check_scores(out, bc_org(star(4)));
  }
  SUBCASE("pendant tree on a cycle") {
    Graph g = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {4, 6}});
    WorkGraph w(g);
    ScoreVector out(7, 0.0);
    CHECK(remove_degree1(w, out) == 3);
    CHECK(w.reach(0) == 4);
    CHECK(w.num_live_edges() == 4);
    check_scores(finish(w, out), bc_naive(g));
  }
}

TEST_CASE("bridge removal") {
  SUBCASE("single edge") {
    WorkGraph w(path(2));
    ScoreVector out(2, 0.0);
    CHECK(remove_bridges(w, out) == 1);
    check_scores(out, {0, 0});
    CHECK(w.num_live_edges() == 0);
  }
  SUBCASE("barbell") {
    WorkGraph w(barbell());
    ScoreVector out(6, 0.0);
    CHECK(remove_bridges(w, out) == 1);
    check_scores(out, {0, 0, 6, 6, 0, 0});
    CHECK(w.reach(2) == 4);
    CHECK(w.reach(3) == 4);
    check_scores(finish(w, out), bc_org(barbell()));
  }
  SUBCASE("bridgeless cycle") {
    WorkGraph w(cycle(4));
    ScoreVector out(4, 0.0);
    CHECK(remove_bridges(w, out) == 0);
  }
  SUBCASE("every bridge of a tree at once") {
    Graph g = make(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    WorkGraph w(g);
    ScoreVector out(6, 0.0);
    CHECK(remove_bridges(w, out) == 5);
    check_scores(finish(w, out), bc_org(g));
  }
}

TEST_CASE("articulation shattering") {
  SUBCASE("path of three") {
    WorkGraph w(path(3));
    CHECK(shatter_articulation(w) == 1);
    auto comps = w.components();
    CHECK(comps.count == 2);
    CHECK(comps.mass == std::vector<std::uint64_t>{3, 3});
    CHECK(w.reach(1) == 2);
    CHECK(w.reach(3) == 2);
    CHECK(w.org(3) == 1);
    check_scores(finish(w, ScoreVector(3, 0.0)), {0, 2, 0});
  }
  SUBCASE("toy network") {
    WorkGraph w(toy_network());
    CHECK(shatter_articulation(w) == 3);
    std::vector<std::uint64_t> arthur;
    for (VertexId v : w.live_vertices())
      if (w.org(v) == Toy::Arthur) arthur.push_back(w.reach(v));
    std::sort(arthur.begin(), arthur.end());
    CHECK(arthur == std::vector<std::uint64_t>{6, 7, 10});
    for (auto mass : w.components().mass) CHECK(mass == kToySize);
    check_scores(finish(w, ScoreVector(kToySize, 0.0)), bc_naive(toy_network()));
  }
  SUBCASE("biconnected graph is left alone") {
    WorkGraph w(complete(4));
    CHECK(shatter_articulation(w) == 0);
    CHECK(w.num_live_edges() == 6);
  }
}

TEST_CASE("side vertex removal") {
  SUBCASE("triangle with a pendant path") {
    Graph g = make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    WorkGraph w(g);
    ScoreVector out(5, 0.0);
    CHECK(remove_side_vertices(w, out) >= 1);
    CHECK_FALSE(w.alive(0));
    check_scores(finish(w, out), bc_naive(g));
  }
  SUBCASE("clique shrinks to nothing over repeated sweeps") {
    WorkGraph w(complete(4));
    ScoreVector out(4, 0.0);
    while (remove_side_vertices(w, out) > 0) {
    }
    CHECK(w.num_live_vertices() == 0);
    check_scores(out, {0, 0, 0, 0});
  }
  SUBCASE("toy network: Diana first, then Wayne") {
    WorkGraph w(toy_network());
    ScoreVector out(kToySize, 0.0);
    remove_side_vertices(w, out);
    CHECK_FALSE(w.alive(Toy::Diana));
    CHECK(w.alive(Toy::Wayne));
    CHECK(w.alive(Toy::Henry));
    remove_side_vertices(w, out);
    CHECK_FALSE(w.alive(Toy::Wayne));
    check_scores(finish(w, out), bc_naive(toy_network()));
  }
  SUBCASE("degree cap") {
    ScoreVector out(6, 0.0);
    WorkGraph capped(complete(6));
    CHECK(remove_side_vertices(capped, out, 4) == 0);
    WorkGraph w(complete(6));
    CHECK(remove_side_vertices(w, out, 5) == 6);
  }
}

TEST_CASE("identical vertex merging") {
  SUBCASE("C4 folds into two type-I classes") {
    WorkGraph w(cycle(4));
    CHECK(merge_identical(w) == 2);
    CHECK(w.num_live_vertices() == 2);
    for (VertexId v : w.live_vertices()) {
      CHECK(w.ident(v) == 2);
      CHECK(w.kind(v) == ClassKind::kTypeI);
    }
    check_scores(finish(w, ScoreVector(4, 0.0)), {1, 1, 1, 1});
  }
  SUBCASE("K3 folds into one vertex") {
    WorkGraph w(complete(3));
    CHECK(merge_identical(w) == 2);
    CHECK(w.num_live_vertices() == 1);
    CHECK(w.ident(w.live_vertices().front()) == 3);
    CHECK(w.kind(w.live_vertices().front()) == ClassKind::kTypeII);
  }
  SUBCASE("star leaves credit the center") {
    WorkGraph w(star(3));
    CHECK(merge_identical(w) == 2);
    check_scores(finish(w, ScoreVector(4, 0.0)), {6, 0, 0, 0});
  }
  SUBCASE("unequal reach is never merged") {
    WorkGraph w(cycle(4));
    w.set_reach(0, 2);
    merge_identical(w);
    CHECK(w.alive(0));
    CHECK(w.alive(2));
    CHECK(w.ident(0) == 1);
  }
  SUBCASE("merging exposes a cut vertex that stays whole") {
    WorkGraph w(merge_exposes_cut_vertex());
    CHECK(articulation_vertices(w) == std::vector<VertexId>{1, 3});
    merge_identical(w);
    CHECK_FALSE(w.alive(7));
    CHECK(w.ident(0) == 2);
    auto cuts = articulation_vertices(w);
    CHECK(std::find(cuts.begin(), cuts.end(), 0u) != cuts.end());
    // A class cannot be split into per-side copies, so only the plain cut
    // vertices are shattered.
    const auto before = w.num_live_vertices();
    CHECK(shatter_articulation(w) == 2);
    CHECK(w.num_live_vertices() == before + 2);
    CHECK(w.ident(0) == 2);
    check_scores(finish(w, ScoreVector(8, 0.0)), bc_naive(merge_exposes_cut_vertex()));
  }
}
