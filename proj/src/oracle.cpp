#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "bcs/oracle.hpp"

namespace bcs {
namespace {

constexpr std::int64_t kUnreached = -1;

/// Row-major n x n matrices of hop distances and shortest-path counts.
struct AllPairs {
  VertexId n;
  std::vector<std::int64_t> dist;
  std::vector<double> paths;

  std::int64_t d(VertexId s, VertexId t) const { return dist[std::size_t{s} * n + t]; }
  double sigma(VertexId s, VertexId t) const { return paths[std::size_t{s} * n + t]; }
};

// Level-synchronous expansion from each source: each level's path counts are
// the sums over the previous level, read straight off the matrix row.
AllPairs all_pairs(const Graph& g) {
  const VertexId n = g.num_vertices();
  AllPairs ap{n, std::vector<std::int64_t>(std::size_t{n} * n, kUnreached),
              std::vector<double>(std::size_t{n} * n, 0.0)};
  std::vector<VertexId> frontier;
  std::vector<VertexId> next;
  for (VertexId s = 0; s < n; ++s) {
    std::int64_t* drow = &ap.dist[std::size_t{s} * n];
    double* prow = &ap.paths[std::size_t{s} * n];
    drow[s] = 0;
    prow[s] = 1.0;
    frontier.assign(1, s);
    for (std::int64_t level = 1; !frontier.empty(); ++level) {
      next.clear();
      for (VertexId v : frontier) {
        for (VertexId u : g.neighbors(v)) {
          if (drow[u] == kUnreached) {
            drow[u] = level;
            next.push_back(u);
          }
        }
      }
      for (VertexId u : next)
        for (VertexId v : g.neighbors(u))
          if (drow[v] == level - 1) prow[u] += prow[v];
      frontier.swap(next);
    }
  }
  return ap;
}

}  // namespace

ScoreVector bc_naive(const Graph& g, VertexId cap) {
  const VertexId n = g.num_vertices();
  if (n > cap)
    throw OracleRefused("oracle refuses graph with " + std::to_string(n) + " vertices (cap " +
                        std::to_string(cap) + ")");
  const AllPairs ap = all_pairs(g);
  ScoreVector bc(n, 0.0);
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = 0; t < n; ++t) {
      const std::int64_t dst = ap.d(s, t);
      if (s == t || dst < 2) continue;
      const double total = ap.sigma(s, t);
      for (VertexId v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        const std::int64_t dsv = ap.d(s, v);
        const std::int64_t dvt = ap.d(v, t);
        if (dsv > 0 && dvt > 0 && dsv + dvt == dst) bc[v] += ap.sigma(s, v) * ap.sigma(v, t) / total;
      }
    }
  }
  return bc;
}

ScoreVector bc_tree(const Graph& g) {
  const VertexId n = g.num_vertices();
  if (n == 0) return {};
  if (g.num_edges() != std::size_t{n} - 1) throw std::invalid_argument("bc_tree: graph is not a tree");

  std::vector<VertexId> parent(n, n);
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<std::uint8_t> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (VertexId u : g.neighbors(order[head])) {
      if (seen[u]) continue;
      seen[u] = 1;
      parent[u] = order[head];
      order.push_back(u);
    }
  }
  if (order.size() != n) throw std::invalid_argument("bc_tree: graph is not a tree");

  std::vector<double> size(n, 1.0);
  std::vector<double> squares(n, 0.0);
  for (std::size_t i = order.size(); i-- > 1;) {
    const VertexId v = order[i];
    size[parent[v]] += size[v];
    squares[parent[v]] += size[v] * size[v];
  }
  ScoreVector bc(n);
  const double nm1 = n - 1.0;
  for (VertexId v = 0; v < n; ++v) {
    const double up = n - size[v];
    bc[v] = nm1 * nm1 - squares[v] - up * up;
  }
  return bc;
}

double interior_vertex_total(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<std::int64_t> dist(n, kUnreached);
  std::deque<VertexId> queue;
  double total = 0.0;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      if (dist[v] > 1) total += static_cast<double>(dist[v] - 1);
      for (VertexId u : g.neighbors(v)) {
        if (dist[u] != kUnreached) continue;
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return total;
}

}  // namespace bcs
