#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bcs/graph.hpp"

namespace bcs {

enum class GraphFormat { kEdgeList, kMetis };

/// Base class for everything parse_graph can throw.
class GraphInputError : public std::runtime_error {
 public:
  GraphInputError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  /// 1-based input line, 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Malformed token or line.
class ParseError : public GraphInputError {
  using GraphInputError::GraphInputError;
};

/// Vertex id outside the valid range.
class RangeError : public GraphInputError {
  using GraphInputError::GraphInputError;
};

/// Header and body disagree (METIS), or an unsupported variant of the format.
class FormatError : public GraphInputError {
  using GraphInputError::GraphInputError;
};

struct ParsedGraph {
  Graph graph;
  NormalizationReport report;
};

/// Parses `text`. Edge lists are "u v" per line with '#' or '%' comments;
/// tokens after the first two on a line are ignored. METIS/Chaco files carry
/// an "n m" header and one neighbor line per vertex.
///
/// `index_base` defaults to 0 for edge lists and 1 for METIS. For edge lists
/// `num_vertices`, when given, declares the id range; otherwise it is the
/// largest id seen plus one.
ParsedGraph parse_graph(std::string_view text, GraphFormat format,
                        std::optional<int> index_base = std::nullopt,
                        std::optional<VertexId> num_vertices = std::nullopt);

/// Reads a whole file and parses it. Throws std::system_error-like
/// std::runtime_error mentioning the path if the file cannot be read.
ParsedGraph read_graph_file(const std::filesystem::path& path, GraphFormat format,
                            std::optional<int> index_base = std::nullopt);

GraphFormat parse_format_name(std::string_view name);

/// 0-based "u v" lines, each undirected edge once.
void write_edge_list(std::ostream& os, const Graph& g);

}  // namespace bcs
