#include "bcs/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bcs {
namespace {

constexpr const char* kHeader =
    "graph,combo,preprocess_s,phase1_s,phase2_s,total_s,remaining_edges,components";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

BenchRecord run_once(const Graph& g, const std::string& graph_name, const Combination* combo,
                     const BcOptions& options) {
  const BcResult r = compute_betweenness(g, combo ? *combo : Combination(), options);
  BenchRecord rec;
  rec.graph = graph_name;
  rec.combo = combo ? combo->str() : kNaturalLabel;
  rec.preprocess_s = r.preprocess_seconds;
  rec.phase1_s = r.phase1_seconds;
  rec.phase2_s = r.phase2_seconds;
  rec.total_s = r.total_seconds;
  rec.remaining_edges = r.remaining_edges;
  rec.components = r.component_edges.size();
  rec.component_edges = r.component_edges;
  return rec;
}

BenchRecord median_of(const Graph& g, const std::string& graph_name, const Combination* combo,
                      int reps, const BcOptions& options) {
  if (reps < 1) throw std::invalid_argument("repetitions must be at least 1");
  std::vector<BenchRecord> runs;
  for (int i = 0; i < reps; ++i) runs.push_back(run_once(g, graph_name, combo, options));
  // Whole records are kept so the parts of the reported run add up.
  std::sort(runs.begin(), runs.end(),
            [](const BenchRecord& a, const BenchRecord& b) { return a.total_s < b.total_s; });
  return runs[(runs.size() - 1) / 2];
}

}  // namespace

BenchRecord bench_once(const Graph& g, const std::string& graph_name, const Combination& combo,
                       int reps, const BcOptions& options) {
  return median_of(g, graph_name, &combo, reps, options);
}

std::vector<BenchRecord> bench_graph(const Graph& g, const std::string& graph_name,
                                     const BenchOptions& options) {
  std::vector<BenchRecord> out;
  if (options.natural_baseline) out.push_back(median_of(g, graph_name, nullptr, options.reps, options.bc));
  for (const auto& combo : options.combos) out.push_back(bench_once(g, graph_name, combo, options.reps, options.bc));
  return out;
}

void write_bench_header(std::ostream& os) { os << kHeader << '\n'; }

void write_bench_row(std::ostream& os, const BenchRecord& r) {
  os << r.graph << ',' << r.combo << ',' << std::setprecision(9) << r.preprocess_s << ',' << r.phase1_s
     << ',' << r.phase2_s << ',' << r.total_s << ',' << r.remaining_edges << ',' << r.components << '\n';
}

void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records) {
  write_bench_header(os);
  for (const auto& r : records) write_bench_row(os, r);
}

std::vector<BenchRecord> read_bench_csv(std::istream& is) {
  std::vector<BenchRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kHeader)
        throw std::runtime_error("bench CSV line " + std::to_string(line_no) + ": expected header \"" +
                                 kHeader + "\"");
      header_seen = true;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 8)
      throw std::runtime_error("bench CSV line " + std::to_string(line_no) + ": expected 8 fields, got " +
                               std::to_string(f.size()));
    BenchRecord r;
    try {
      r.graph = f[0];
      r.combo = f[1];
      r.preprocess_s = std::stod(f[2]);
      r.phase1_s = std::stod(f[3]);
      r.phase2_s = std::stod(f[4]);
      r.total_s = std::stod(f[5]);
      r.remaining_edges = std::stoull(f[6]);
      r.components = std::stoull(f[7]);
    } catch (const std::exception&) {
      throw std::runtime_error("bench CSV line " + std::to_string(line_no) + ": malformed number");
    }
    out.push_back(std::move(r));
  }
  if (!header_seen) throw std::runtime_error("bench CSV is empty");
  return out;
}

void write_normalized_csv(std::ostream& os, std::span<const BenchRecord> records) {
  std::map<std::string, double> o_total;
  std::map<std::string, double> natural_total;
  for (const auto& r : records) {
    if (r.combo == "o") o_total[r.graph] = r.total_s;
    if (r.combo == kNaturalLabel) natural_total[r.graph] = r.total_s;
  }
  os << "graph,combo,preprocess,phase1,phase2,total,vs_natural\n" << std::setprecision(9);
  for (const auto& r : records) {
    os << r.graph << ',' << r.combo << ',';
    auto base = o_total.find(r.graph);
    if (base != o_total.end() && base->second > 0) {
      const double b = base->second;
      os << r.preprocess_s / b << ',' << r.phase1_s / b << ',' << r.phase2_s / b << ',' << r.total_s / b;
    } else {
      os << ",,,";
    }
    os << ',';
    auto nat = natural_total.find(r.graph);
    if (nat != natural_total.end() && nat->second > 0) os << r.total_s / nat->second;
    os << '\n';
  }
}

void write_component_csv(std::ostream& os, std::span<const BenchRecord> records) {
  os << "graph,combo,component,edges\n";
  for (const auto& r : records)
    for (std::size_t i = 0; i < r.component_edges.size(); ++i)
      os << r.graph << ',' << r.combo << ',' << i << ',' << r.component_edges[i] << '\n';
}

}  // namespace bcs
