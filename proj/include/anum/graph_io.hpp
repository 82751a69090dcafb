#pragma once

#include <string>
#include <string_view>

#include "anum/graph.hpp"

namespace anum {

/// "n m" on the first line, then m lines "u v" with 1-based labels.
/// Throws ParseError (with line number), OutOfRange or LoopEdge.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Standard graph6: size prefix, then the upper triangle in column order
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, big-endian,
/// each byte offset by 63. An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Parses a 1-based list "a,b,c" into a 0-based vertex set of g.
VertexSet parse_vertex_list(std::string_view text, const Graph& g);
/// Parses a 1-based pair "a,b".
EdgePair parse_edge_pair(std::string_view text, const Graph& g);

/// "{1,2,3}" style 1-based rendering.
std::string format_vertex_set(VertexSet s);

}  // namespace anum
