#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

/// Malformed graph text. `offset` is a byte offset for graph6 input and a
/// 1-based line number for edge lists and multi-line files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest order accepted by the single-byte graph6 size field.
inline constexpr std::size_t kMaxGraph6Order = 62;

/// Parses one graph6 line (no trailing newline). An optional ">>graph6<<"
/// header is accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Edge list text: a header line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Reads every non-blank line of a graph6 stream. Errors carry the line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Reads a corpus file: graph6 lines, or a single edge list when the first
/// line is an "n m" header.
std::vector<Graph> read_graph_file(const std::string& path);

/// Interprets a command-line graph argument: an existing file path is read
/// (first graph), anything else is parsed as a literal graph6 string.
Graph read_graph_argument(const std::string& arg);

}  // namespace isolation
