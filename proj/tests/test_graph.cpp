#include <algorithm>
#include <vector>

#include "bcs/graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bcs;
using namespace fixtures;

TEST_CASE("CSR layout of a path") {
  Graph g = path(3);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.offsets() == std::vector<std::size_t>{0, 1, 3, 4});
  auto n1 = g.neighbors(1);
  CHECK(std::vector<VertexId>(n1.begin(), n1.end()) == std::vector<VertexId>{0, 2});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("construction normalizes loops and duplicates") {
  NormalizationReport report;
  std::vector<Edge> edges{{0, 1}, {1, 0}, {0, 0}, {2, 1}};
  Graph g = Graph::from_edges(3, edges, &report);
  CHECK(g.num_edges() == 2);
  CHECK(report.self_loops == 1);
  CHECK(report.duplicate_edges == 1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto run = g.neighbors(v);
    CHECK(std::is_sorted(run.begin(), run.end()));
    CHECK(std::find(run.begin(), run.end(), v) == run.end());
    for (VertexId u : run) CHECK(g.has_edge(u, v));
  }
}

TEST_CASE("from_arcs symmetrizes one-sided entries") {
  NormalizationReport report;
  std::vector<Edge> arcs{{0, 1}, {1, 0}, {1, 2}};
  Graph g = Graph::from_arcs(3, arcs, &report);
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK(report.asymmetric_arcs == 1);
}

TEST_CASE("bfs_order") {
  SUBCASE("path labeled 2-0-1 from vertex 2") {
    Graph g = make(3, {{2, 0}, {0, 1}});
    CHECK(bfs_order(g, 2).forward == std::vector<VertexId>{1, 2, 0});
  }
  SUBCASE("already in BFS order gives the identity") {
    Graph g = make(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
    CHECK(bfs_order(g, 0).forward == VertexPermutation::identity(5).forward);
  }
  SUBCASE("disconnected components continue from the lowest unvisited id") {
    Graph g = make(4, {{0, 1}, {2, 3}});
    CHECK(bfs_order(g, 0).forward == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(bfs_order(g, 3).forward == std::vector<VertexId>{2, 3, 1, 0});
  }
  SUBCASE("result is a valid permutation") {
    Graph g = toy_network();
    auto p = bfs_order(g, Toy::Martin);
    CHECK(p.valid());
    CHECK(p.forward[Toy::Martin] == 0);
  }
}

TEST_CASE("relabel") {
  Graph g = toy_network();
  CHECK(relabel(g, VertexPermutation::identity(g.num_vertices())) == g);

  Graph p3 = path(3);
  auto rev = VertexPermutation::from_forward({2, 1, 0});
  Graph r = relabel(p3, rev);
  CHECK(r.degree(1) == 2);
  CHECK(r.has_edge(2, 1));
  CHECK(r.has_edge(1, 0));

  auto p = bfs_order(g, Toy::Diana);
  CHECK(relabel(relabel(g, p), p.inverted()) == g);

  CHECK_THROWS_AS(relabel(g, VertexPermutation::identity(3)), std::invalid_argument);
}

TEST_CASE("connected_components") {
  CHECK(connected_components(path(3)).label == std::vector<VertexId>{0, 0, 0});
  auto two = connected_components(make(4, {{0, 1}, {2, 3}}));
  CHECK(two.label == std::vector<VertexId>{0, 0, 1, 1});
  CHECK(two.count == 2);
  auto empty = connected_components(Graph::from_edges(3, std::vector<Edge>{}));
  CHECK(empty.label == std::vector<VertexId>{0, 1, 2});
}
