#include "bcs/work_graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bcs {

WorkGraph::WorkGraph(const Graph& g)
    : original_n_(g.num_vertices()),
      org_(g.num_vertices()),
      reach_(g.num_vertices(), 1),
      ident_(g.num_vertices(), 1),
      kind_(g.num_vertices(), ClassKind::kSingle),
      members_(g.num_vertices()),
      alive_(g.num_vertices(), 1),
      adj_(g.num_vertices()),
      degree_(g.num_vertices()),
      live_vertices_(g.num_vertices()),
      live_arcs_(g.adjacency().size()) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    org_[v] = v;
    members_[v] = {v};
    auto run = g.neighbors(v);
    adj_[v].assign(run.begin(), run.end());
    degree_[v] = g.degree(v);
  }
}

std::vector<VertexId> WorkGraph::live_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(degree_[v]);
  for_each_neighbor(v, [&](VertexId w) { out.push_back(w); });
  return out;
}

bool WorkGraph::adjacent(VertexId u, VertexId v) const {
  if (!alive_[u] || !alive_[v]) return false;
  const auto& run = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(run.begin(), run.end(), other);
}

void WorkGraph::remove_vertex(VertexId v) {
  assert(alive_[v]);
  for_each_neighbor(v, [&](VertexId w) { --degree_[w]; });
  live_arcs_ -= 2 * static_cast<std::size_t>(degree_[v]);
  degree_[v] = 0;
  adj_[v].clear();
  alive_[v] = 0;
  --live_vertices_;
}

void WorkGraph::remove_edges(std::span<const Edge> edges) {
  if (edges.empty()) return;
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size();) {
    const VertexId u = arcs[i].first;
    std::size_t j = i;
    while (j < arcs.size() && arcs[j].first == u) ++j;
    auto& run = adj_[u];
    std::size_t removed = 0;
    std::size_t k = i;
    std::erase_if(run, [&](VertexId w) {
      while (k < j && arcs[k].second < w) ++k;
      if (k < j && arcs[k].second == w) {
        ++removed;
        return true;
      }
      return false;
    });
    degree_[u] -= static_cast<VertexId>(removed);
    live_arcs_ -= removed;
    i = j;
  }
}

VertexId WorkGraph::add_copy(VertexId of, std::uint64_t reach) {
  const VertexId id = vertex_bound();
  org_.push_back(org_[of]);
  reach_.push_back(reach);
  ident_.push_back(1);
  kind_.push_back(ClassKind::kSingle);
  members_.push_back({org_[of]});
  alive_.push_back(1);
  adj_.emplace_back();
  degree_.push_back(0);
  ++live_vertices_;
  return id;
}

void WorkGraph::reset_edges(std::span<const Edge> edges) {
  for (VertexId v = 0; v < vertex_bound(); ++v) {
    adj_[v].clear();
    degree_[v] = 0;
  }
  for (auto [u, v] : edges) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  live_arcs_ = 0;
  for (VertexId v = 0; v < vertex_bound(); ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    degree_[v] = static_cast<VertexId>(adj_[v].size());
    live_arcs_ += adj_[v].size();
  }
}

void WorkGraph::fold_into(VertexId rep, VertexId other, ClassKind kind) {
  if (reach_[rep] != reach_[other]) throw std::logic_error("fold_into: reach values differ");
  ident_[rep] += ident_[other];
  kind_[rep] = kind;
  members_[rep].insert(members_[rep].end(), members_[other].begin(), members_[other].end());
  members_[other].clear();
  remove_vertex(other);
}

void WorkGraph::compact() {
  for (auto& run : adj_) std::erase_if(run, [&](VertexId w) { return !alive_[w]; });
}

WorkGraph::Components WorkGraph::components() const {
  Components out;
  out.label.assign(vertex_bound(), kNone);
  std::vector<VertexId> stack;
  for (VertexId r = 0; r < vertex_bound(); ++r) {
    if (!alive_[r] || out.label[r] != kNone) continue;
    std::uint64_t mass_sum = 0;
    std::size_t arc_sum = 0;
    out.label[r] = out.count;
    stack.push_back(r);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      mass_sum += mass(v);
      arc_sum += degree_[v];
      for_each_neighbor(v, [&](VertexId w) {
        if (out.label[w] == kNone) {
          out.label[w] = out.count;
          stack.push_back(w);
        }
      });
    }
    out.mass.push_back(mass_sum);
    out.edges.push_back(arc_sum / 2);
    ++out.count;
  }
  return out;
}

std::vector<VertexId> WorkGraph::live_vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_vertices_);
  for (VertexId v = 0; v < vertex_bound(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

}  // namespace bcs
