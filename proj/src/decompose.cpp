#include "bcs/decompose.hpp"

#include <algorithm>

namespace bcs {
namespace {

std::span<const VertexId> raw_neighbors(const Graph& g, VertexId v) { return g.neighbors(v); }
bool is_alive(const Graph&, VertexId) { return true; }

std::span<const VertexId> raw_neighbors(const WorkGraph& w, VertexId v) { return w.raw_neighbors(v); }
bool is_alive(const WorkGraph& w, VertexId v) { return w.alive(v); }

template <class Adjacency>
BlockDecomposition blocks_of(const Adjacency& g) {
  const VertexId n = g.vertex_bound();
  BlockDecomposition out;
  std::vector<std::int64_t> disc(n, -1);
  std::vector<std::int64_t> low(n, 0);
  std::int64_t clock = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<Edge> edge_stack;

  for (VertexId root = 0; root < n; ++root) {
    if (!is_alive(g, root) || disc[root] >= 0) continue;
    disc[root] = low[root] = clock++;
    frames.push_back({root, WorkGraph::kNone, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const VertexId v = f.v;
      auto run = raw_neighbors(g, v);
      if (f.next < run.size()) {
        const VertexId w = run[f.next++];
        if (!is_alive(g, w) || w == f.parent) continue;
        if (disc[w] < 0) {
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = clock++;
          frames.push_back({w, v, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId p = frames.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Edge> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e.first == p && e.second == v) break;
        }
        out.blocks.push_back(std::move(block));
      }
    }
  }
  return out;
}

template <class Adjacency>
std::vector<VertexId> cut_vertices(const Adjacency& g) {
  auto per_vertex = blocks_of(g).blocks_of_vertex(g.vertex_bound());
  std::vector<VertexId> out;
  for (VertexId v = 0; v < per_vertex.size(); ++v)
    if (per_vertex[v].size() >= 2) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> BlockDecomposition::blocks_of_vertex(VertexId n) const {
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto [u, v] : blocks[b]) {
      if (out[u].empty() || out[u].back() != b) out[u].push_back(b);
      if (out[v].empty() || out[v].back() != b) out[v].push_back(b);
    }
  }
  return out;
}

BlockDecomposition biconnected_blocks(const Graph& g) { return blocks_of(g); }
BlockDecomposition biconnected_blocks(const WorkGraph& w) { return blocks_of(w); }

std::vector<Edge> find_bridges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& block : blocks_of(g).blocks) {
    if (block.size() == 1) {
      auto [u, v] = block.front();
      out.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> articulation_vertices(const Graph& g) { return cut_vertices(g); }
std::vector<VertexId> articulation_vertices(const WorkGraph& w) { return cut_vertices(w); }

}  // namespace bcs
