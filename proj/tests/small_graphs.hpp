#pragma once

#include <vector>

#include "bcs/graph.hpp"

namespace small_graphs {

/// Every graph on n <= 8 vertices up to isomorphism, one representative each.
std::vector<bcs::Graph> all_graphs(bcs::VertexId n);

bool connected(const bcs::Graph& g);

}  // namespace small_graphs
