#pragma once

#include <string_view>

#include "anum/graph.hpp"

namespace anum {

/// Reconnected complement G*_I: the graph on V(G) \ I where {a, b} is an edge
/// exactly when a and b are joined by a path inside G|_{I ∪ {a, b}}.
/// Labels of the result refer back to G.
LabeledGraph reconnected_complement(const Graph& g, VertexSet removed);

/// Same graph, computed by collapsing the vertices of I one at a time in the
/// given order (each step deletes v and joins its neighbors pairwise).
/// Used as an independent check of reconnected_complement.
LabeledGraph reconnected_complement_by_collapse(const Graph& g, std::span<const int> order);

/// G*_{v}: delete v and make its neighbors pairwise adjacent.
LabeledGraph collapse_vertex(const Graph& g, int v);

enum class ClosureClass { Connected, HamiltonianPlusSmall, UniversalVertex };

std::string_view to_string(ClosureClass c) noexcept;
std::optional<ClosureClass> parse_closure_class(std::string_view name);

/// Connected: connected graphs, null graph included.
/// HamiltonianPlusSmall: Hamiltonian graphs together with the null graph, K1 and K2.
/// UniversalVertex: graphs with a vertex adjacent to all others, null graph included.
bool in_closure_class(const Graph& g, ClosureClass c);

/// In the class, and no single-edge deletion stays in the class.
bool is_minimal_in_class(const Graph& g, ClosureClass c);

}  // namespace anum
