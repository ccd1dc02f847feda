#include "bcs/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bcs {
namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++number_;
    return true;
  }
  std::size_t number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                         std::string(token) + "'",
                     line);
  }
  return value;
}

bool is_comment_or_blank(std::string_view line, std::string_view comment_chars) {
  for (char c : line) {
    if (is_space(c)) continue;
    return comment_chars.find(c) != std::string_view::npos;
  }
  return true;
}

VertexId to_vertex(long long raw, int base, long long limit, std::size_t line) {
  long long id = raw - base;
  if (id < 0 || (limit >= 0 && id >= limit) || id > static_cast<long long>(~VertexId{0} - 1)) {
    throw RangeError("line " + std::to_string(line) + ": vertex id " + std::to_string(raw) +
                         " out of range",
                     line);
  }
  return static_cast<VertexId>(id);
}

ParsedGraph parse_edge_list(std::string_view text, int base, std::optional<VertexId> declared) {
  LineReader reader(text);
  std::string_view line;
  std::vector<Edge> edges;
  long long limit = declared ? static_cast<long long>(*declared) : -1;
  VertexId n = declared.value_or(0);
  while (reader.next(line)) {
    if (is_comment_or_blank(line, "#%")) {
      // write_edge_list records the vertex count so isolated vertices survive.
      if (!declared && line.rfind("# n=", 0) == 0) {
        auto tokens = split_tokens(line.substr(4));
        if (!tokens.empty()) {
          long long header_n = 0;
          auto [ptr, ec] = std::from_chars(tokens[0].data(), tokens[0].data() + tokens[0].size(), header_n);
          if (ec == std::errc() && header_n > 0 && header_n < (1LL << 32) - 1)
            n = std::max(n, static_cast<VertexId>(header_n));
        }
      }
      continue;
    }
    auto tokens = split_tokens(line);
    if (tokens.size() < 2) {
      throw ParseError("line " + std::to_string(reader.number()) + ": expected 'u v'",
                       reader.number());
    }
    VertexId u = to_vertex(parse_integer(tokens[0], reader.number()), base, limit, reader.number());
    VertexId v = to_vertex(parse_integer(tokens[1], reader.number()), base, limit, reader.number());
    if (!declared) n = std::max({n, u + 1, v + 1});
    edges.emplace_back(u, v);
  }
  ParsedGraph out;
  out.graph = Graph::from_edges(n, edges, &out.report);
  return out;
}

ParsedGraph parse_metis(std::string_view text, int base) {
  LineReader reader(text);
  std::string_view line;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  while (reader.next(line)) {
    if (is_comment_or_blank(line, "%")) continue;
    auto tokens = split_tokens(line);
    if (tokens.size() < 2) throw FormatError("METIS header must be 'n m [fmt]'", reader.number());
    n = parse_integer(tokens[0], reader.number());
    m = parse_integer(tokens[1], reader.number());
    if (n < 0 || m < 0) throw FormatError("METIS header has negative counts", reader.number());
    if (tokens.size() >= 3) {
      auto fmt = tokens[2];
      if (fmt.find_first_not_of('0') != std::string_view::npos) {
        throw FormatError("weighted METIS graphs are not supported (fmt=" + std::string(fmt) + ")",
                          reader.number());
      }
    }
    have_header = true;
    break;
  }
  if (!have_header) {
    ParsedGraph empty;
    return empty;
  }

  std::vector<Edge> arcs;
  long long vertex = 0;
  std::size_t entries = 0;
  while (reader.next(line)) {
    // In METIS a blank line is a vertex without neighbors; only '%' lines are skipped.
    bool comment = false;
    for (char c : line) {
      if (is_space(c)) continue;
      comment = (c == '%');
      break;
    }
    if (comment) continue;
    auto tokens = split_tokens(line);
    if (vertex >= n) {
      if (tokens.empty()) continue;
      throw FormatError("METIS body has more than n=" + std::to_string(n) + " vertex lines",
                        reader.number());
    }
    for (auto token : tokens) {
      VertexId w = to_vertex(parse_integer(token, reader.number()), base, n, reader.number());
      arcs.emplace_back(static_cast<VertexId>(vertex), w);
      ++entries;
    }
    ++vertex;
  }
  if (vertex != n) {
    throw FormatError("METIS header declares " + std::to_string(n) + " vertices but body has " +
                          std::to_string(vertex),
                      0);
  }
  if (entries != static_cast<std::size_t>(2 * m)) {
    throw FormatError("METIS header declares " + std::to_string(m) + " edges but body lists " +
                          std::to_string(entries) + " adjacency entries",
                      0);
  }
  ParsedGraph out;
  out.graph = Graph::from_arcs(static_cast<VertexId>(n), arcs, &out.report);
  return out;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text, GraphFormat format, std::optional<int> index_base,
                        std::optional<VertexId> num_vertices) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return parse_edge_list(text, index_base.value_or(0), num_vertices);
    case GraphFormat::kMetis:
      return parse_metis(text, index_base.value_or(1));
  }
  throw std::invalid_argument("unknown graph format");
}

ParsedGraph read_graph_file(const std::filesystem::path& path, GraphFormat format,
                            std::optional<int> index_base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading '" + path.string() + "'");
  return parse_graph(buffer.str(), format, index_base);
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "metis" || name == "chaco") return GraphFormat::kMetis;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  for (auto [u, v] : g.edge_list()) os << u << ' ' << v << '\n';
}

}  // namespace bcs
