#include <sstream>

#include "bcs/graph_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bcs;
using namespace fixtures;

TEST_CASE("edge list parsing") {
  auto p = parse_graph("0 1\n1 2", GraphFormat::kEdgeList);
  CHECK(p.graph == path(3));
  CHECK(p.report.clean());

  auto dirty = parse_graph("0 1\n1 0\n0 0\n", GraphFormat::kEdgeList);
  CHECK(dirty.graph.num_vertices() == 2);
  CHECK(dirty.graph.num_edges() == 1);
  CHECK(dirty.report.duplicate_edges == 1);
  CHECK(dirty.report.self_loops == 1);

  auto one_based = parse_graph("# comment\n1 2\n\n2 3  7.5\n", GraphFormat::kEdgeList, 1);
  CHECK(one_based.graph == path(3));
}

TEST_CASE("edge list errors carry line numbers") {
  try {
    parse_graph("0 1\n1 x\n", GraphFormat::kEdgeList);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("0\n", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("0 -1\n", GraphFormat::kEdgeList), RangeError);
  CHECK_THROWS_AS(parse_graph("0 3\n", GraphFormat::kEdgeList, 0, 3), RangeError);
  CHECK_THROWS_AS(parse_graph("0 1\n", GraphFormat::kEdgeList, 1), RangeError);
}

TEST_CASE("METIS parsing matches the edge list") {
  auto metis = parse_graph("3 2\n2\n1 3\n2\n", GraphFormat::kMetis);
  CHECK(metis.graph == parse_graph("0 1\n1 2", GraphFormat::kEdgeList).graph);

  auto with_isolated = parse_graph("% header comment\n3 1\n2\n1\n\n", GraphFormat::kMetis);
  CHECK(with_isolated.graph.num_vertices() == 3);
  CHECK(with_isolated.graph.degree(2) == 0);
}

TEST_CASE("METIS header inconsistencies") {
  CHECK_THROWS_AS(parse_graph("3 3\n2\n1 3\n2\n", GraphFormat::kMetis), FormatError);
  CHECK_THROWS_AS(parse_graph("2 1\n2\n1\n2\n", GraphFormat::kMetis), FormatError);
  CHECK_THROWS_AS(parse_graph("3 2 1\n2 1\n1 1 3 1\n2 1\n", GraphFormat::kMetis), FormatError);
  CHECK_THROWS_AS(parse_graph("3 2\n2\n1 4\n2\n", GraphFormat::kMetis), RangeError);
}

TEST_CASE("written edge lists read back, isolated vertices included") {
  Graph g = make(6, {{0, 3}, {3, 4}, {1, 3}});
  std::ostringstream os;
  write_edge_list(os, g);
  CHECK(parse_graph(os.str(), GraphFormat::kEdgeList).graph == g);
}

TEST_CASE("unreadable files name the path") {
  try {
    read_graph_file("/nonexistent/graph.txt", GraphFormat::kEdgeList);
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/graph.txt") != std::string::npos);
  }
}

TEST_CASE("format names") {
  CHECK(parse_format_name("edge-list") == GraphFormat::kEdgeList);
  CHECK(parse_format_name("metis") == GraphFormat::kMetis);
  CHECK_THROWS_AS(parse_format_name("mtx"), std::invalid_argument);
}
