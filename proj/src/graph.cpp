#include "bcs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bcs {

Graph Graph::from_sorted_arcs(VertexId n, std::vector<Edge> arcs) {
  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : arcs) ++offsets[u + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<VertexId> neighbors;
  neighbors.reserve(arcs.size());
  for (const auto& arc : arcs) neighbors.push_back(arc.second);
  return Graph(std::move(offsets), std::move(neighbors));
}

Graph Graph::from_edges(VertexId n, std::span<const Edge> edges, NormalizationReport* report) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t loops = 0;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) {
      ++loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());
  std::size_t dups = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());

  std::vector<Edge> arcs;
  arcs.reserve(2 * canon.size());
  for (auto [u, v] : canon) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  if (report) {
    report->self_loops += loops;
    report->duplicate_edges += dups;
  }
  return from_sorted_arcs(n, std::move(arcs));
}

Graph Graph::from_arcs(VertexId n, std::span<const Edge> input, NormalizationReport* report) {
  std::vector<Edge> arcs;
  arcs.reserve(input.size());
  std::size_t loops = 0;
  for (auto [u, v] : input) {
    if (u >= n || v >= n) throw std::out_of_range("arc endpoint out of range");
    if (u == v) {
      ++loops;
      continue;
    }
    arcs.emplace_back(u, v);
  }
  std::sort(arcs.begin(), arcs.end());
  auto last = std::unique(arcs.begin(), arcs.end());
  std::size_t dups = static_cast<std::size_t>(arcs.end() - last);
  arcs.erase(last, arcs.end());

  std::size_t asymmetric = 0;
  std::vector<Edge> missing;
  for (auto [u, v] : arcs) {
    if (!std::binary_search(arcs.begin(), arcs.end(), Edge{v, u})) {
      ++asymmetric;
      missing.emplace_back(v, u);
    }
  }
  if (!missing.empty()) {
    arcs.insert(arcs.end(), missing.begin(), missing.end());
    std::sort(arcs.begin(), arcs.end());
  }
  if (report) {
    report->self_loops += loops;
    report->duplicate_edges += dups;
    report->asymmetric_arcs += asymmetric;
  }
  return from_sorted_arcs(n, std::move(arcs));
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto run = neighbors(u);
  return std::binary_search(run.begin(), run.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexPermutation VertexPermutation::identity(VertexId n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return {ids, ids};
}

VertexPermutation VertexPermutation::from_forward(std::vector<VertexId> forward) {
  std::vector<VertexId> inverse(forward.size());
  for (VertexId v = 0; v < forward.size(); ++v) {
    if (forward[v] >= forward.size()) throw std::invalid_argument("permutation entry out of range");
    inverse[forward[v]] = v;
  }
  VertexPermutation p{std::move(forward), std::move(inverse)};
  if (!p.valid()) throw std::invalid_argument("not a permutation");
  return p;
}

bool VertexPermutation::valid() const {
  if (forward.size() != inverse.size()) return false;
  for (VertexId v = 0; v < forward.size(); ++v) {
    if (forward[v] >= inverse.size() || inverse[forward[v]] != v) return false;
  }
  return true;
}

VertexPermutation bfs_order(const Graph& g, VertexId start) {
  const VertexId n = g.num_vertices();
  if (n == 0) return {};
  if (start >= n) throw std::out_of_range("bfs_order: start vertex out of range");

  constexpr VertexId kUnranked = ~VertexId{0};
  std::vector<VertexId> forward(n, kUnranked);
  std::vector<VertexId> queue;
  queue.reserve(n);
  VertexId next_root = 0;
  VertexId root = start;
  while (true) {
    forward[root] = static_cast<VertexId>(queue.size());
    std::size_t head = queue.size();
    queue.push_back(root);
    while (head < queue.size()) {
      VertexId v = queue[head++];
      for (VertexId w : g.neighbors(v)) {
        if (forward[w] == kUnranked) {
          forward[w] = static_cast<VertexId>(queue.size());
          queue.push_back(w);
        }
      }
    }
    while (next_root < n && forward[next_root] != kUnranked) ++next_root;
    if (next_root == n) break;
    root = next_root;
  }
  return {std::move(forward), std::move(queue)};
}

Graph relabel(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.num_vertices()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (auto [u, v] : g.edge_list()) edges.emplace_back(p.forward[u], p.forward[v]);
  return Graph::from_edges(g.num_vertices(), edges);
}

ComponentLabels connected_components(const Graph& g) {
  const VertexId n = g.num_vertices();
  constexpr VertexId kNone = ~VertexId{0};
  ComponentLabels out{std::vector<VertexId>(n, kNone), 0};
  std::vector<VertexId> stack;
  for (VertexId r = 0; r < n; ++r) {
    if (out.label[r] != kNone) continue;
    out.label[r] = out.count;
    stack.push_back(r);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (out.label[w] == kNone) {
          out.label[w] = out.count;
          stack.push_back(w);
        }
      }
    }
    ++out.count;
  }
  return out;
}

}  // namespace bcs
