#include "isolation/graph_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

namespace isolation {
namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

bool parse_size(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool looks_like_edge_list_header(std::string_view line) {
  auto tokens = split_ws(trim(line));
  std::size_t a = 0;
  std::size_t b = 0;
  return tokens.size() == 2 && parse_size(tokens[0], a) && parse_size(tokens[1], b);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126 at offset " +
                           std::to_string(base + i),
                       base + i);
    }
  }
  const auto first = static_cast<unsigned char>(text[0]);
  if (first == 126) {
    throw ParseError("graph6: orders above " + std::to_string(kMaxGraph6Order) +
                         " are not supported",
                     base);
  }
  const std::size_t n = first - kOffset;
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - 1 < body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " data bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(text.size() - 1),
                     base + text.size());
  }
  if (text.size() - 1 > body) {
    throw ParseError("graph6: trailing data at offset " + std::to_string(base + 1 + body),
                     base + 1 + body);
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int word = static_cast<unsigned char>(text[1 + bit / 6]) - kOffset;
      if ((word >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - kOffset;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
      throw ParseError("graph6: nonzero padding bits", base + text.size() - 1);
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw GraphError("graph6: order " + std::to_string(n) + " exceeds the supported maximum " +
                     std::to_string(kMaxGraph6Order));
  }
  std::string out(1, static_cast<char>(n + kOffset));
  int word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kOffset));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kOffset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(trim(text.substr(start, end - start)));
    start = end + 1;
  }
  std::size_t lineno = 0;
  auto next_line = [&]() -> std::string_view {
    while (lineno < lines.size() && lines[lineno].empty()) ++lineno;
    return lineno < lines.size() ? lines[lineno++] : std::string_view{};
  };

  auto header = split_ws(next_line());
  std::size_t n = 0;
  std::size_t m = 0;
  if (header.size() != 2 || !parse_size(header[0], n) || !parse_size(header[1], m))
    throw ParseError("edge list: expected header \"n m\"", lineno == 0 ? 1 : lineno);

  std::vector<Edge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    auto tokens = split_ws(next_line());
    std::size_t u = 0;
    std::size_t v = 0;
    if (tokens.size() != 2 || !parse_size(tokens[0], u) || !parse_size(tokens[1], v))
      throw ParseError("edge list: expected \"u v\" for edge " + std::to_string(e + 1), lineno);
    if (u >= n || v >= n || u == v)
      throw ParseError("edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v),
                       lineno);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!next_line().empty()) throw ParseError("edge list: trailing data", lineno);
  Graph g = Graph::from_edges(n, edges);
  if (g.size() != m) throw ParseError("edge list: duplicate edges", 1);
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    try {
      out.push_back(parse_graph6(view));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::string_view first_line = std::string_view(text).substr(0, text.find('\n'));
  try {
    if (looks_like_edge_list_header(first_line)) return {parse_edge_list(text)};
    std::istringstream lines(text);
    return read_graph6_stream(lines);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.offset());
  }
}

Graph read_graph_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    auto graphs = read_graph_file(arg);
    if (graphs.empty()) throw ParseError(arg + ": no graph found", 0);
    return graphs.front();
  }
  return parse_graph6(arg);
}

}  // namespace isolation
