#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "bcs/reduce.hpp"

namespace bcs {

Combination Combination::parse(std::string_view text) {
  Combination c;
  for (char ch : text) {
    if (std::string_view("odbasi").find(ch) == std::string_view::npos)
      throw std::invalid_argument("unknown technique '" + std::string(1, ch) + "' in combination \"" +
                                  std::string(text) + "\" (allowed: o d b a s i)");
    const auto t = static_cast<Technique>(ch);
    if (c.has(t))
      throw std::invalid_argument("technique '" + std::string(1, ch) + "' repeated in combination \"" +
                                  std::string(text) + "\"");
    c.techniques_.push_back(t);
  }
  return c;
}

const std::vector<Combination>& Combination::standard_set() {
  static const std::vector<Combination> set = [] {
    std::vector<Combination> out;
    for (const char* s : {"o", "od", "odb", "odba", "odbas", "odbai", "odbasi"}) out.push_back(parse(s));
    return out;
  }();
  return set;
}

bool Combination::has(Technique t) const {
  return std::find(techniques_.begin(), techniques_.end(), t) != techniques_.end();
}

std::string Combination::str() const {
  std::string out;
  for (Technique t : techniques_) out.push_back(static_cast<char>(t));
  return out;
}

PreprocessResult preprocess(const Graph& g, const Combination& combo, const PreprocessOptions& options) {
  PreprocessResult r{WorkGraph(g), ScoreVector(g.num_vertices(), 0.0), {}, 0};
  WorkGraph& w = r.work;

  bool any_pass = false;
  for (Technique t : combo.techniques()) any_pass |= t != Technique::kOrder;
  if (!any_pass) return r;

  while (true) {
    ++r.iterations;
    std::size_t total = 0;
    for (Technique t : combo.techniques()) {
      std::size_t changes = 0;
      switch (t) {
        case Technique::kOrder: continue;
        case Technique::kDegree1: changes = remove_degree1(w, r.partial); break;
        case Technique::kBridge: changes = remove_bridges(w, r.partial); break;
        case Technique::kArticulation: changes = shatter_articulation(w); break;
        case Technique::kSide: changes = remove_side_vertices(w, r.partial, options.max_side_degree); break;
        case Technique::kIdentical: changes = merge_identical(w); break;
      }
      total += changes;

      PassStats s;
      s.pass = std::string(1, static_cast<char>(t));
      s.iteration = r.iterations;
      s.changes = changes;
      s.remaining_vertices = w.num_live_vertices();
      s.remaining_edges = w.num_live_edges();
      if (options.component_histograms) {
        for (std::size_t e : w.components().edges)
          if (e > 0) s.component_edges.push_back(e);
        std::sort(s.component_edges.rbegin(), s.component_edges.rend());
      }
      if (options.after_pass) options.after_pass(s, w);
      r.stats.push_back(std::move(s));
    }
    w.compact();
    if (total == 0) break;
  }
  return r;
}

std::vector<ComponentJob> extract_components(const WorkGraph& w) {
  const auto comps = w.components();
  std::vector<std::vector<VertexId>> vertices(comps.count);
  for (VertexId v = 0; v < w.vertex_bound(); ++v)
    if (w.alive(v) && comps.edges[comps.label[v]] > 0) vertices[comps.label[v]].push_back(v);

  std::vector<VertexId> local(w.vertex_bound(), WorkGraph::kNone);
  std::vector<ComponentJob> jobs;
  for (const auto& vs : vertices) {
    if (vs.empty()) continue;
    ComponentJob job;
    const auto n = static_cast<VertexId>(vs.size());
    for (VertexId i = 0; i < n; ++i) local[vs[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(comps.edges[comps.label[vs.front()]]);
    job.input.reach.reserve(n);
    job.input.ident.reserve(n);
    job.input.targets.reserve(n);
    for (VertexId v : vs) {
      w.for_each_neighbor(v, [&](VertexId x) {
        if (v < x) edges.emplace_back(local[v], local[x]);
      });
      job.input.reach.push_back(static_cast<double>(w.reach(v)));
      job.input.ident.push_back(static_cast<double>(w.ident(v)));
      job.input.targets.push_back(w.members(v));
    }
    job.graph = Graph::from_edges(n, edges);
    jobs.push_back(std::move(job));
  }
  return jobs;
}

ScoreVector finalize(const WorkGraph& w, const ScoreVector& partial, const ScoreVector& kernel_out) {
  if (partial.size() != kernel_out.size())
    throw std::invalid_argument("finalize: score vectors differ in length");
  ScoreVector out(partial.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = partial[i] + kernel_out[i];
  for (VertexId v = 0; v < w.vertex_bound(); ++v)
    if (w.alive(v)) add_class_correction(w, v, out);
  return out;
}

void write_pass_stats_csv(std::ostream& os, std::span<const PassStats> stats) {
  os << "pass,iteration,changes,remaining_vertices,remaining_edges,component_edges\n";
  for (const auto& s : stats) {
    os << s.pass << ',' << s.iteration << ',' << s.changes << ',' << s.remaining_vertices << ','
       << s.remaining_edges << ',';
    for (std::size_t i = 0; i < s.component_edges.size(); ++i) os << (i ? ";" : "") << s.component_edges[i];
    os << '\n';
  }
}

}  // namespace bcs
