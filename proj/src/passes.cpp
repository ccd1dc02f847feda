#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

#include "bcs/brandes_core.hpp"
#include "bcs/decompose.hpp"
#include "bcs/reduce.hpp"

namespace bcs {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

double as_double(std::uint64_t x) { return static_cast<double>(x); }

/// Rooted traversal of a forest given as adjacency lists. Fills parent (by
/// node) and subtree sums of `weight`, and the total of each node's tree.
struct ForestSums {
  std::vector<std::size_t> parent;
  std::vector<std::size_t> parent_edge;
  std::vector<std::uint64_t> subtree;
  std::vector<std::uint64_t> tree_total;
};

constexpr std::size_t kNoParent = ~std::size_t{0};

ForestSums forest_sums(const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj,
                       const std::vector<std::uint64_t>& weight) {
  const std::size_t n = adj.size();
  ForestSums f;
  f.parent.assign(n, kNoParent);
  f.parent_edge.assign(n, kNoParent);
  f.subtree = weight;
  f.tree_total.assign(n, 0);
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::size_t> order;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    order.clear();
    order.push_back(root);
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::size_t x = order[head];
      for (auto [y, edge] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        f.parent[y] = x;
        f.parent_edge[y] = edge;
        order.push_back(y);
      }
    }
    for (std::size_t i = order.size(); i-- > 1;) f.subtree[f.parent[order[i]]] += f.subtree[order[i]];
    for (std::size_t x : order) f.tree_total[x] = f.subtree[root];
  }
  return f;
}

}  // namespace

void add_class_correction(const WorkGraph& w, VertexId rep, ScoreVector& out) {
  const std::uint64_t k = w.ident(rep);
  if (k <= 1) return;
  const double r = as_double(w.reach(rep));
  const double within = as_double(k - 1) * r * (r - 1.0);
  if (within != 0.0)
    for (VertexId t : w.members(rep)) out[t] += within;
  if (w.kind(rep) != ClassKind::kTypeI) return;

  // Ordered pairs between members are routed through the common neighbors,
  // one shortest path per neighbor copy.
  double copies = 0.0;
  w.for_each_neighbor(rep, [&](VertexId y) { copies += as_double(w.ident(y)); });
  if (copies == 0.0) return;
  const double per_copy = as_double(k) * as_double(k - 1) * r * r / copies;
  w.for_each_neighbor(rep, [&](VertexId y) {
    for (VertexId t : w.members(y)) out[t] += per_copy;
  });
}

std::size_t remove_degree1(WorkGraph& w, ScoreVector& out) {
  const auto comps = w.components();
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < w.vertex_bound(); ++v)
    if (w.alive(v) && w.degree(v) <= 1) queue.push_back(v);

  std::size_t changes = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    if (!w.alive(u)) continue;
    if (w.degree(u) == 0) {
      add_class_correction(w, u, out);
      w.remove_vertex(u);
      ++changes;
      continue;
    }
    if (w.degree(u) != 1 || w.ident(u) != 1) continue;
    VertexId v = WorkGraph::kNone;
    w.for_each_neighbor(u, [&](VertexId x) { v = x; });
    if (w.ident(v) != 1) continue;

    const double ru = as_double(w.reach(u));
    const double rest = as_double(comps.mass[comps.label[u]]) - ru;
    out[w.org(u)] += (ru - 1.0) * rest;
    out[w.org(v)] += (rest - 1.0) * ru;
    w.add_reach(v, w.reach(u));
    w.remove_vertex(u);
    ++changes;
    if (w.degree(v) <= 1) queue.push_back(v);
  }
  return changes;
}

std::size_t remove_bridges(WorkGraph& w, ScoreVector& out) {
  const auto decomposition = biconnected_blocks(w);
  std::vector<Edge> bridges;
  for (const auto& block : decomposition.blocks)
    if (block.size() == 1) bridges.push_back(block.front());
  const bool any_eligible = std::any_of(bridges.begin(), bridges.end(), [&](const Edge& e) {
    return w.ident(e.first) == 1 && w.ident(e.second) == 1;
  });
  if (!any_eligible) return 0;

  // Two-edge-connected pieces joined by all bridges form a forest; the mass on
  // either side of a bridge is a subtree sum in it.
  DisjointSets pieces(w.vertex_bound());
  for (const auto& block : decomposition.blocks)
    if (block.size() > 1)
      for (auto [a, b] : block) pieces.unite(a, b);

  std::vector<std::size_t> node_of(w.vertex_bound(), kNoParent);
  std::vector<std::uint64_t> weight;
  for (VertexId v = 0; v < w.vertex_bound(); ++v) {
    if (!w.alive(v)) continue;
    const std::size_t root = pieces.find(v);
    if (node_of[root] == kNoParent) {
      node_of[root] = weight.size();
      weight.push_back(0);
    }
    weight[node_of[root]] += w.mass(v);
  }
  auto node = [&](VertexId v) { return node_of[pieces.find(v)]; };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> forest(weight.size());
  for (std::size_t i = 0; i < bridges.size(); ++i) {
    forest[node(bridges[i].first)].emplace_back(node(bridges[i].second), i);
    forest[node(bridges[i].second)].emplace_back(node(bridges[i].first), i);
  }
  const ForestSums sums = forest_sums(forest, weight);

  std::vector<Edge> removed;
  std::vector<std::pair<VertexId, std::uint64_t>> reach_gain;
  for (std::size_t i = 0; i < bridges.size(); ++i) {
    const auto [u, v] = bridges[i];
    if (w.ident(u) != 1 || w.ident(v) != 1) continue;
    const std::size_t nu = node(u);
    const std::size_t nv = node(v);
    std::uint64_t side_u = 0;
    std::uint64_t side_v = 0;
    if (sums.parent_edge[nv] == i) {
      side_v = sums.subtree[nv];
      side_u = sums.tree_total[nv] - side_v;
    } else {
      side_u = sums.subtree[nu];
      side_v = sums.tree_total[nu] - side_u;
    }
    out[w.org(u)] += (as_double(side_u) - 1.0) * as_double(side_v);
    out[w.org(v)] += (as_double(side_v) - 1.0) * as_double(side_u);
    reach_gain.emplace_back(u, side_v);
    reach_gain.emplace_back(v, side_u);
    removed.push_back(bridges[i]);
  }
  for (auto [v, gain] : reach_gain) w.add_reach(v, gain);
  w.remove_edges(removed);
  return removed.size();
}

std::size_t shatter_articulation(WorkGraph& w) {
  const auto decomposition = biconnected_blocks(w);
  const std::size_t num_blocks = decomposition.blocks.size();
  const auto blocks_of = decomposition.blocks_of_vertex(w.vertex_bound());

  // Blocks meeting at a class representative stay together: a class cannot be
  // split into per-side copies.
  DisjointSets merged(num_blocks);
  for (VertexId v = 0; v < w.vertex_bound(); ++v)
    if (blocks_of[v].size() >= 2 && w.ident(v) != 1)
      for (std::size_t b : blocks_of[v]) merged.unite(blocks_of[v].front(), b);

  std::vector<std::size_t> group_of_block(num_blocks);
  std::vector<std::size_t> group_index(num_blocks, kNoParent);
  std::size_t num_groups = 0;
  for (std::size_t b = 0; b < num_blocks; ++b) {
    const std::size_t root = merged.find(b);
    if (group_index[root] == kNoParent) group_index[root] = num_groups++;
    group_of_block[b] = group_index[root];
  }

  std::vector<std::vector<std::size_t>> groups_of(w.vertex_bound());
  for (VertexId v = 0; v < w.vertex_bound(); ++v) {
    for (std::size_t b : blocks_of[v]) groups_of[v].push_back(group_of_block[b]);
    std::sort(groups_of[v].begin(), groups_of[v].end());
    groups_of[v].erase(std::unique(groups_of[v].begin(), groups_of[v].end()), groups_of[v].end());
  }

  // Tree nodes: groups first, then one node per splittable cut vertex.
  std::vector<std::uint64_t> weight(num_groups, 0);
  std::vector<VertexId> cut_vertices;
  std::vector<std::size_t> cut_node(w.vertex_bound(), kNoParent);
  for (VertexId v = 0; v < w.vertex_bound(); ++v) {
    if (groups_of[v].empty()) continue;
    if (groups_of[v].size() >= 2) {
      cut_node[v] = num_groups + cut_vertices.size();
      cut_vertices.push_back(v);
      weight.push_back(w.mass(v));
    } else {
      weight[groups_of[v].front()] += w.mass(v);
    }
  }
  if (cut_vertices.empty()) return 0;

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree(weight.size());
  for (VertexId v : cut_vertices) {
    for (std::size_t g : groups_of[v]) {
      tree[cut_node[v]].emplace_back(g, 0);
      tree[g].emplace_back(cut_node[v], 0);
    }
  }
  const ForestSums sums = forest_sums(tree, weight);

  // copy_of[v] lists (group, work id) for split vertices, sorted by group.
  std::vector<std::vector<std::pair<std::size_t, VertexId>>> copy_of(w.vertex_bound());
  std::size_t created = 0;
  std::vector<std::pair<VertexId, std::uint64_t>> new_reach;
  for (VertexId v : cut_vertices) {
    const std::size_t c = cut_node[v];
    bool first = true;
    for (std::size_t g : groups_of[v]) {
      // Mass outside the sides reached through g, v itself included.
      const std::uint64_t r =
          sums.parent[g] == c ? sums.tree_total[g] - sums.subtree[g] : sums.subtree[c];
      if (first) {
        new_reach.emplace_back(v, r);
        copy_of[v].emplace_back(g, v);
        first = false;
      } else {
        copy_of[v].emplace_back(g, w.add_copy(v, r));
        ++created;
      }
    }
  }
  for (auto [v, r] : new_reach) w.set_reach(v, r);

  auto endpoint = [&](VertexId v, std::size_t g) {
    if (copy_of[v].empty()) return v;
    auto it = std::lower_bound(copy_of[v].begin(), copy_of[v].end(), std::pair<std::size_t, VertexId>{g, 0});
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(w.num_live_edges());
  for (std::size_t b = 0; b < num_blocks; ++b) {
    const std::size_t g = group_of_block[b];
    for (auto [x, y] : decomposition.blocks[b]) edges.emplace_back(endpoint(x, g), endpoint(y, g));
  }
  w.reset_edges(edges);
  return created;
}

std::size_t remove_side_vertices(WorkGraph& w, ScoreVector& out, VertexId max_degree) {
  auto comps = w.components();
  const VertexId bound = w.vertex_bound();
  std::vector<double> reach(bound);
  std::vector<double> ident(bound);
  for (VertexId v = 0; v < bound; ++v) {
    reach[v] = as_double(w.reach(v));
    ident[v] = as_double(w.ident(v));
  }
  detail::Weights<true, true> weights{reach, ident};
  BfsState st(bound);

  std::size_t changes = 0;
  std::vector<VertexId> nbrs;
  for (VertexId s = 0; s < bound; ++s) {
    if (!w.alive(s) || w.ident(s) != 1 || w.degree(s) > max_degree) continue;
    nbrs = w.live_neighbors(s);
    bool clique = std::all_of(nbrs.begin(), nbrs.end(), [&](VertexId y) {
      return w.ident(y) == 1 || w.kind(y) == ClassKind::kTypeII;
    });
    for (std::size_t i = 0; clique && i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; clique && j < nbrs.size(); ++j)
        clique = w.adjacent(nbrs[i], nbrs[j]);
    if (!clique) continue;

    const double rs = reach[s];
    detail::run_source(w, s, weights, st, nullptr, [&](VertexId y, double d) {
      const double gain = rs * d + rs * (d - (reach[y] - 1.0));
      for (VertexId t : w.members(y)) out[t] += gain;
    });
    auto& component_mass = comps.mass[comps.label[s]];
    out[w.org(s)] += (rs - 1.0) * (as_double(component_mass) - rs);
    component_mass -= w.reach(s);
    w.remove_vertex(s);
    ++changes;
  }
  return changes;
}

std::size_t merge_identical(WorkGraph& w) {
  std::size_t changes = 0;

  // Buckets by (neighborhood hash, degree, reach), then exact comparison.
  auto merge_pass = [&](bool closed, ClassKind kind, ClassKind excluded) {
    struct Candidate {
      std::uint64_t hash;
      VertexId degree;
      std::uint64_t reach;
      VertexId v;
      auto key() const { return std::tie(hash, degree, reach, v); }
    };
    std::vector<Candidate> candidates;
    for (VertexId v = 0; v < w.vertex_bound(); ++v) {
      if (!w.alive(v) || w.degree(v) == 0 || w.kind(v) == excluded) continue;
      std::uint64_t h = closed ? v : 0;
      w.for_each_neighbor(v, [&](VertexId x) { h += x; });
      candidates.push_back({h, w.degree(v), w.reach(v), v});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.key() < b.key(); });

    auto neighborhood = [&](VertexId v) {
      auto set = w.live_neighbors(v);
      if (closed) set.insert(std::lower_bound(set.begin(), set.end(), v), v);
      return set;
    };

    std::vector<std::pair<VertexId, VertexId>> folds;  // (rep, other)
    for (std::size_t i = 0; i < candidates.size();) {
      std::size_t j = i + 1;
      while (j < candidates.size() && candidates[j].hash == candidates[i].hash &&
             candidates[j].degree == candidates[i].degree &&
             candidates[j].reach == candidates[i].reach)
        ++j;
      if (j - i >= 2) {
        std::vector<std::pair<VertexId, std::vector<VertexId>>> classes;
        for (std::size_t k = i; k < j; ++k) {
          const VertexId v = candidates[k].v;
          auto set = neighborhood(v);
          auto same = std::find_if(classes.begin(), classes.end(),
                                   [&](const auto& cls) { return cls.second == set; });
          if (same == classes.end()) classes.emplace_back(v, std::move(set));
          else folds.emplace_back(same->first, v);
        }
      }
      i = j;
    }
    for (auto [rep, other] : folds) w.fold_into(rep, other, kind);
    changes += folds.size();
  };

  merge_pass(false, ClassKind::kTypeI, ClassKind::kTypeII);
  merge_pass(true, ClassKind::kTypeII, ClassKind::kTypeI);
  return changes;
}

}  // namespace bcs
