#pragma once

#include <vector>

#include "bcs/graph.hpp"
#include "bcs/work_graph.hpp"

namespace bcs {

/// Biconnected components as edge lists, found by one iterative
/// Hopcroft-Tarjan DFS. A block with a single edge is a bridge; isolated
/// vertices belong to no block.
struct BlockDecomposition {
  std::vector<std::vector<Edge>> blocks;

  /// Block ids containing each vertex, for a vertex bound of n.
  std::vector<std::vector<std::size_t>> blocks_of_vertex(VertexId n) const;
};

BlockDecomposition biconnected_blocks(const Graph& g);
BlockDecomposition biconnected_blocks(const WorkGraph& w);

std::vector<Edge> find_bridges(const Graph& g);
std::vector<VertexId> articulation_vertices(const Graph& g);
std::vector<VertexId> articulation_vertices(const WorkGraph& w);

}  // namespace bcs
