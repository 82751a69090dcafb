#include "anum/recomplement.hpp"

#include <bit>

#include "anum/error.hpp"

namespace anum {

namespace {

LabeledGraph keep_labels(Mask kept, auto&& adjacent) {
  LabeledGraph out;
  out.labels = VertexSet(kept).members();
  GraphBuilder b(static_cast<int>(out.labels.size()));
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    for (std::size_t j = i + 1; j < out.labels.size(); ++j) {
      if (adjacent(out.labels[i], out.labels[j])) b.add(static_cast<int>(i), static_cast<int>(j));
    }
  }
  out.graph = std::move(b).build();
  return out;
}

}  // namespace

LabeledGraph reconnected_complement(const Graph& g, VertexSet removed) {
  if (!removed.is_subset_of(g.vertices())) {
    throw Error(ErrorKind::OutOfRange, "removed set is not contained in the graph");
  }
  const Mask inner = removed.bits();
  const Mask kept = g.vertices().bits() & ~inner;
  return keep_labels(kept, [&](int a, int b) {
    const Mask within = inner | bit(a) | bit(b);
    return (component_of(g, within, a) >> b) & 1U;
  });
}

LabeledGraph collapse_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::OutOfRange, "collapse vertex out of range");
  const Mask nbrs = g.neighbors(v);
  const Mask kept = g.vertices().bits() & ~bit(v);
  return keep_labels(kept, [&](int a, int b) {
    return g.has_edge(a, b) || (((nbrs >> a) & 1U) && ((nbrs >> b) & 1U));
  });
}

LabeledGraph reconnected_complement_by_collapse(const Graph& g, std::span<const int> order) {
  LabeledGraph current{g, g.vertices().members()};
  Mask seen = 0;
  for (int v : order) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::OutOfRange, "collapse vertex out of range");
    if ((seen >> v) & 1U) throw Error(ErrorKind::BadParams, "vertex repeated in collapse order");
    seen |= bit(v);
    int local = -1;
    for (std::size_t i = 0; i < current.labels.size(); ++i) {
      if (current.labels[i] == v) local = static_cast<int>(i);
    }
    LabeledGraph next = collapse_vertex(current.graph, local);
    for (int& label : next.labels) label = current.labels[static_cast<std::size_t>(label)];
    current = std::move(next);
  }
  return current;
}

std::string_view to_string(ClosureClass c) noexcept {
  switch (c) {
    case ClosureClass::Connected: return "connected";
    case ClosureClass::HamiltonianPlusSmall: return "hamiltonian";
    case ClosureClass::UniversalVertex: return "universal";
  }
  return "unknown";
}

std::optional<ClosureClass> parse_closure_class(std::string_view name) {
  if (name == "connected") return ClosureClass::Connected;
  if (name == "hamiltonian") return ClosureClass::HamiltonianPlusSmall;
  if (name == "universal") return ClosureClass::UniversalVertex;
  return std::nullopt;
}

bool in_closure_class(const Graph& g, ClosureClass c) {
  switch (c) {
    case ClosureClass::Connected:
      return is_connected(g, g.vertices());
    case ClosureClass::HamiltonianPlusSmall:
      if (g.order() <= 1) return true;
      if (g.order() == 2) return g.edge_count() == 1;
      return is_hamiltonian(g);
    case ClosureClass::UniversalVertex:
      return g.order() == 0 || has_universal_vertex(g).has_value();
  }
  return false;
}

bool is_minimal_in_class(const Graph& g, ClosureClass c) {
  if (!in_closure_class(g, c)) return false;
  for (const auto& e : g.edges()) {
    if (in_closure_class(remove_edge(g, e), c)) return false;
  }
  return true;
}

}  // namespace anum
