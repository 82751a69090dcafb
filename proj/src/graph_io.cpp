#include "anum/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "anum/error.hpp"

namespace anum {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto stop = end == std::string_view::npos ? text.size() : end;
    auto line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    const auto* first = line.data() + i;
    const auto* last = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected integers");
    }
    out.push_back(value);
    i += static_cast<std::size_t>(ptr - first);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "line 1: missing header \"n m\"");

  const auto header = parse_ints(lines[0], 1);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw ParseError(1, "line 1: header must be two non-negative integers \"n m\"");
  }
  if (header[0] > kMaxVertices) {
    throw Error(ErrorKind::VertexCountExceeded, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  const int n = static_cast<int>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);
  if (lines.size() != m + 1) {
    throw ParseError(lines.size() < m + 1 ? lines.size() + 1 : m + 2,
                     "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  }

  GraphBuilder b(n);
  for (std::size_t i = 1; i <= m; ++i) {
    const auto pair = parse_ints(lines[i], i + 1);
    if (pair.size() != 2) throw ParseError(i + 1, "line " + std::to_string(i + 1) + ": expected \"u v\"");
    for (long long v : pair) {
      if (v < 1 || v > n) {
        throw Error(ErrorKind::OutOfRange,
                    "line " + std::to_string(i + 1) + ": vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
    }
    if (pair[0] == pair[1]) {
      throw Error(ErrorKind::LoopEdge, "line " + std::to_string(i + 1) + ": loop edge at vertex " + std::to_string(pair[0]));
    }
    b.add(static_cast<int>(pair[0] - 1), static_cast<int>(pair[1] - 1));
  }
  return std::move(b).build();
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.a + 1 << ' ' << e.b + 1 << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(0, "graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError(0, "graph6: invalid character");
  }

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError(0, "graph6: unsupported size prefix");
    long value = 0;
    for (int i = 1; i <= 3; ++i) value = (value << 6) | (text[static_cast<std::size_t>(i)] - 63);
    if (value < 63) throw ParseError(0, "graph6: non-canonical size prefix");
    if (value > kMaxVertices) {
      throw Error(ErrorKind::VertexCountExceeded, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    }
    n = static_cast<int>(value);
    pos = 4;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw ParseError(0, "graph6: body length does not match vertex count");

  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) b.add(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = text[pos + k / 6] - 63;
    if ((byte >> (5 - static_cast<int>(k % 6))) & 1) throw ParseError(0, "graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace {

std::vector<int> parse_label_list(std::string_view text, int n) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(0, "expected a comma-separated list of 1-based vertex labels");
    }
    if (value < 1 || value > n) {
      throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(value) + " outside 1.." + std::to_string(n));
    }
    out.push_back(value - 1);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

VertexSet parse_vertex_list(std::string_view text, const Graph& g) {
  Mask m = 0;
  for (int v : parse_label_list(text, g.order())) m |= bit(v);
  return VertexSet(m);
}

EdgePair parse_edge_pair(std::string_view text, const Graph& g) {
  const auto labels = parse_label_list(text, g.order());
  if (labels.size() != 2) throw ParseError(0, "an edge is written \"a,b\"");
  return EdgePair::make(labels[0], labels[1]);
}

std::string format_vertex_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace anum
