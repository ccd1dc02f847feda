// bcshatter: exact betweenness centrality with graph shattering and
// compression.
//
//   bcshatter compute  GRAPH [--combo odbasi] [--unordered] [--out scores.csv]
//   bcshatter verify   GRAPH|SPEC [--combo o,od,...]
//   bcshatter bench    GRAPH... [--reps 3] [--natural-baseline] [--out bench.csv]
//   bcshatter profile  bench.csv [--out profile.csv]
//   bcshatter generate SPEC [--out graph.txt]
//
// SPEC is a generator spec "family:n[:param[:seed]]", e.g. gnp:30:0.2:7.
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bcs/bench.hpp"
#include "bcs/graph_io.hpp"
#include "bcs/oracle.hpp"
#include "bcs/pipeline.hpp"
#include "bcs/profile.hpp"

namespace fs = std::filesystem;
using namespace bcs;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string format = "edge-list";
  std::optional<int> base;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  VertexId max_side_degree = 4;

  BcOptions bc() const {
    BcOptions o;
    o.order_seed = seed;
    o.max_side_degree = max_side_degree;
    return o;
  }
};

Combination parse_combo(const std::string& text) {
  try {
    return Combination::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Combination> parse_combos(const std::vector<std::string>& texts) {
  if (texts.empty()) return Combination::standard_set();
  std::vector<Combination> out;
  for (const auto& t : texts) out.push_back(parse_combo(t));
  return out;
}

Graph load_graph(const std::string& path, const InputOptions& in) {
  GraphFormat format;
  try {
    format = parse_format_name(in.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  try {
    ParsedGraph parsed = read_graph_file(path, format, in.base);
    const auto& r = parsed.report;
    if (!r.clean())
      std::cerr << path << ": normalized input (" << r.self_loops << " self-loops, " << r.duplicate_edges
                << " duplicate edges, " << r.asymmetric_arcs << " asymmetric entries dropped or fixed)\n";
    return std::move(parsed.graph);
  } catch (const GraphInputError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

/// A file path if one exists, otherwise a generator spec.
Graph load_graph_or_spec(const std::string& arg, const InputOptions& in, std::string& name) {
  if (fs::exists(arg)) {
    name = fs::path(arg).stem().string();
    return load_graph(arg, in);
  }
  GeneratorSpec spec;
  try {
    spec = GeneratorSpec::parse(arg);
  } catch (const std::invalid_argument& e) {
    throw IoError("cannot read \"" + arg + "\": no such file, and not a generator spec (" + e.what() + ")");
  }
  name = spec.str();
  try {
    return generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Writes through `body` either to stdout or to the file at `path`.
template <class Body>
void emit(const std::string& path, Body&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path + " for writing");
  body(os);
  if (!os) throw IoError("failed writing " + path);
}

std::string sidecar(const std::string& path, const std::string& suffix) {
  fs::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix + p.extension().string())).string();
}

// ---------------------------------------------------------------------------

int cmd_compute(const std::string& graph_path, const InputOptions& in, const RunOptions& run,
                const std::string& combo_text, bool unordered, const std::string& out_path,
                const std::string& stats_path) {
  const Combination combo = parse_combo(combo_text);
  const Graph g = load_graph(graph_path, in);
  const BcResult r = compute_betweenness(g, combo, run.bc());
  const double scale = unordered ? 0.5 : 1.0;
  emit(out_path, [&](std::ostream& os) {
    os << "vertex_id,bc\n" << std::setprecision(17);
    for (VertexId v = 0; v < g.num_vertices(); ++v) os << v << ',' << r.scores[v] * scale << '\n';
  });
  if (!stats_path.empty()) emit(stats_path, [&](std::ostream& os) { write_pass_stats_csv(os, r.passes); });
  return kOk;
}

int cmd_verify(const std::string& input, const InputOptions& in, const RunOptions& run,
               const std::vector<std::string>& combo_texts, std::optional<VertexId> corrupt_vertex) {
  const auto combos = parse_combos(combo_texts);
  std::string name;
  const Graph g = load_graph_or_spec(input, in, name);
  ScoreVector reference;
  try {
    reference = bc_naive(g);
  } catch (const OracleRefused& e) {
    throw UsageError(e.what());
  }

  constexpr double kTolerance = 1e-6;
  std::cout << "graph " << name << ": n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  bool all_pass = true;
  for (const auto& combo : combos) {
    BcResult r = compute_betweenness(g, combo, run.bc());
    if (corrupt_vertex && *corrupt_vertex < r.scores.size()) r.scores[*corrupt_vertex] += 1.0;
    double max_abs = 0.0;
    double max_rel = 0.0;
    VertexId worst = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const double abs_dev = std::fabs(r.scores[v] - reference[v]);
      const double rel_dev = abs_dev / std::max(std::fabs(reference[v]), 1.0);
      if (rel_dev > max_rel) worst = v;
      max_abs = std::max(max_abs, abs_dev);
      max_rel = std::max(max_rel, rel_dev);
    }
    const bool pass = max_rel <= kTolerance;
    all_pass &= pass;
    const std::string label = combo.str().empty() ? "(none)" : combo.str();
    std::cout << std::left << std::setw(8) << label << (pass ? " PASS" : " FAIL") << std::setprecision(3)
              << " max_abs=" << max_abs << " max_rel=" << max_rel << " remaining_edges=" << r.remaining_edges;
    if (!pass)
      std::cout << std::setprecision(17) << " vertex=" << worst << " expected=" << reference[worst]
                << " got=" << r.scores[worst];
    std::cout << '\n';
  }
  std::cout << (all_pass ? "PASS" : "FAIL") << '\n';
  return all_pass ? kOk : kVerifyFailed;
}

int cmd_bench(const std::vector<std::string>& inputs, const InputOptions& in, const RunOptions& run,
              const std::vector<std::string>& combo_texts, int reps, bool natural_baseline,
              const std::string& out_path) {
  BenchOptions options;
  options.combos = parse_combos(combo_texts);
  options.reps = reps;
  options.natural_baseline = natural_baseline;
  options.bc = run.bc();
  if (reps < 1) throw UsageError("--reps must be at least 1");

  std::vector<BenchRecord> records;
  bool io_failure = false;
  for (const auto& input : inputs) {
    std::string name;
    Graph g;
    try {
      g = load_graph_or_spec(input, in, name);
    } catch (const IoError& e) {
      std::cerr << "error: " << e.what() << " (skipped)\n";
      io_failure = true;
      continue;
    }
    std::cerr << "bench " << name << " (n=" << g.num_vertices() << ", m=" << g.num_edges() << ")\n";
    for (auto& rec : bench_graph(g, name, options)) {
      std::cerr << "  " << std::left << std::setw(8) << rec.combo << std::setprecision(4) << " total "
                << rec.total_s << " s, remaining edges " << rec.remaining_edges << '\n';
      records.push_back(std::move(rec));
    }
  }

  emit(out_path, [&](std::ostream& os) { write_bench_csv(os, records); });
  if (!out_path.empty() && out_path != "-") {
    emit(sidecar(out_path, "_normalized"), [&](std::ostream& os) { write_normalized_csv(os, records); });
    emit(sidecar(out_path, "_components"), [&](std::ostream& os) { write_component_csv(os, records); });
  }
  return io_failure ? kIo : kOk;
}

int cmd_profile(const std::string& bench_path, const std::string& out_path) {
  std::ifstream is(bench_path);
  if (!is) throw IoError("cannot open " + bench_path);
  std::vector<BenchRecord> records;
  try {
    records = read_bench_csv(is);
  } catch (const std::runtime_error& e) {
    throw IoError(bench_path + ": " + e.what());
  }
  std::vector<ProfilePoint> points;
  try {
    points = performance_profile(records);
  } catch (const std::invalid_argument& e) {
    throw IoError(bench_path + ": " + e.what());
  }
  emit(out_path, [&](std::ostream& os) { write_profile_csv(os, points); });
  return kOk;
}

int cmd_generate(const std::string& spec_text, const std::string& out_path) {
  Graph g;
  try {
    g = generate(GeneratorSpec::parse(spec_text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(out_path, [&](std::ostream& os) { write_edge_list(os, g); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact betweenness centrality with graph shattering and compression"};
  app.require_subcommand(1);

  InputOptions in;
  RunOptions run;
  auto add_input_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", in.format, "Input format: edge-list or metis")
        ->check(CLI::IsMember({"edge-list", "metis"}));
    cmd->add_option("--base", in.base, "Index base of vertex ids (default 0 for edge lists, 1 for METIS)")
        ->check(CLI::IsMember({0, 1}));
  };
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", run.seed, "Seed for a random BFS-ordering start vertex (default: vertex 0)");
    cmd->add_option("--max-side-degree", run.max_side_degree, "Largest degree checked for side vertices")
        ->check(CLI::PositiveNumber);
  };

  std::string graph_path;
  std::string combo_text = "odbasi";
  std::vector<std::string> combo_list;
  bool unordered = false;
  std::string out_path;
  std::string stats_path;
  auto* compute = app.add_subcommand("compute", "Compute betweenness scores as CSV");
  compute->add_option("graph", graph_path, "Input graph file")->required();
  add_input_flags(compute);
  add_run_flags(compute);
  compute->add_option("--combo", combo_text, "Reduction techniques, a subset of \"odbasi\"");
  compute->add_flag("--unordered", unordered, "Halve scores (count each unordered pair once)");
  compute->add_option("--out", out_path, "Output CSV (default stdout)");
  compute->add_option("--stats", stats_path, "Also write per-pass statistics CSV here");

  std::string verify_input;
  std::optional<VertexId> corrupt_vertex;
  auto* verify = app.add_subcommand("verify", "Check every combination against the brute-force oracle");
  verify->add_option("input", verify_input, "Graph file or generator spec family:n[:param[:seed]]")
      ->required();
  add_input_flags(verify);
  add_run_flags(verify);
  verify->add_option("--combo", combo_list, "Combinations to check (default: o,od,odb,odba,odbas,odbai,odbasi)")
      ->delimiter(',');
  verify->add_option("--corrupt-vertex", corrupt_vertex)->group("");  // harness self-test

  std::vector<std::string> bench_inputs;
  int reps = 3;
  bool natural_baseline = false;
  auto* bench = app.add_subcommand("bench", "Time every combination on every graph");
  bench->add_option("graphs", bench_inputs, "Graph files or generator specs")->required();
  add_input_flags(bench);
  add_run_flags(bench);
  bench->add_option("--combo", combo_list, "Combinations to time (default: o,od,odb,odba,odbas,odbai,odbasi)")->delimiter(',');
  bench->add_option("--reps", reps, "Repetitions per cell; the median is reported");
  bench->add_flag("--natural-baseline", natural_baseline, "Also time plain Brandes in the input order");
  bench->add_option("--out", out_path,
                    "Bench CSV (default stdout); with a file, _normalized and _components sidecars too");

  std::string bench_csv;
  auto* profile = app.add_subcommand("profile", "Performance profile from a bench CSV");
  profile->add_option("bench_csv", bench_csv, "CSV written by bench")->required();
  profile->add_option("--out", out_path, "Output CSV (default stdout)");

  std::string spec_text;
  auto* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
  gen->add_option("spec", spec_text, "family:n[:param[:seed]]")->required();
  gen->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(graph_path, in, run, combo_text, unordered, out_path, stats_path);
    if (*verify) return cmd_verify(verify_input, in, run, combo_list, corrupt_vertex);
    if (*bench) return cmd_bench(bench_inputs, in, run, combo_list, reps, natural_baseline, out_path);
    if (*profile) return cmd_profile(bench_csv, out_path);
    if (*gen) return cmd_generate(spec_text, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
