#include "anum/decomposition.hpp"

#include <algorithm>

#include "anum/error.hpp"
#include "anum/recomplement.hpp"

namespace anum {

namespace {

void check_pair(const Graph& g, EdgePair e) {
  if (e.a == e.b) throw Error(ErrorKind::LoopEdge, "edge endpoints coincide");
  if (e.a < 0 || e.b >= g.order()) throw Error(ErrorKind::OutOfRange, "edge endpoint outside the graph");
}

}  // namespace

std::vector<DecompositionTerm> delta_terms(const Graph& g, EdgePair e, const EngineOptions& opts) {
  check_pair(g, e);
  std::vector<DecompositionTerm> terms;
  if (g.has_edge(e.a, e.b)) return terms;

  const Graph augmented = add_edge(g, e);
  const SaTable base_table = sa_all_subsets(g, opts);
  const auto b_values = b_all_subsets(base_table);

  const Mask top = full_mask(g.order());
  for (Mask s = 0;; ++s) {
    if (is_even_cover(augmented, s) && !is_even_cover(g, s)) {
      const VertexSet j(s);
      const BigInt weight = abs(b_values[static_cast<std::size_t>(s)]);
      const LabeledGraph rest = reconnected_complement(augmented, j);
      terms.push_back({j, weight, a_sequence(rest.graph, opts)});
    }
    if (s == top) break;
  }
  return terms;
}

void accumulate_shifted(ASequence& acc, const BigInt& weight, const ASequence& tail, std::size_t shift) {
  if (acc.size() < shift + tail.size()) acc.resize(shift + tail.size());
  for (std::size_t i = 0; i < tail.size(); ++i) acc[shift + i] += weight * tail[i];
}

namespace {

void trim_zeros(ASequence& s) {
  while (s.size() > 1 && sgn(s.back()) == 0) s.pop_back();
}

}  // namespace

DecompositionReport verify_decomposition(const Graph& g, EdgePair e, const EngineOptions& opts) {
  check_pair(g, e);
  DecompositionReport report;
  report.base = g;
  report.edge = e;
  report.terms = delta_terms(g, e, opts);
  report.base_sequence = a_sequence(g, opts);
  report.lhs = a_sequence(add_edge(g, e), opts);

  report.rhs = report.base_sequence;
  for (const auto& term : report.terms) {
    accumulate_shifted(report.rhs, term.weight, term.tail, static_cast<std::size_t>(term.j.size() / 2));
  }
  ASequence lhs = report.lhs;
  ASequence rhs = report.rhs;
  trim_zeros(lhs);
  trim_zeros(rhs);
  report.rhs_check = lhs == rhs;
  return report;
}

bool verify_scalar_decomposition(const Graph& g, EdgePair e, const EngineOptions& opts) {
  check_pair(g, e);
  if (g.order() % 2 != 0) throw Error(ErrorKind::OddOrder, "scalar identity needs an even-order graph");
  BigInt rhs = a_number(g, opts);
  for (const auto& term : delta_terms(g, e, opts)) {
    const LabeledGraph rest = reconnected_complement(add_edge(g, e), term.j);
    rhs += term.weight * a_number(rest.graph, opts);
  }
  return a_number(add_edge(g, e), opts) == rhs;
}

bool termwise_le(const ASequence& a, const ASequence& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const BigInt x = i < a.size() ? a[i] : BigInt(0);
    const BigInt y = i < b.size() ? b[i] : BigInt(0);
    if (x > y) return false;
  }
  return true;
}

bool monotonicity_check(const Graph& h, const Graph& g, const EngineOptions& opts) {
  if (h.order() > g.order()) throw Error(ErrorKind::NotASubgraph, "H has more vertices than G");
  for (const auto& e : h.edges()) {
    if (!g.has_edge(e.a, e.b)) throw Error(ErrorKind::NotASubgraph, "an edge of H is missing from G");
  }
  const Graph padded = pad_isolated(h, g.order() - h.order());
  return termwise_le(a_sequence(padded, opts), a_sequence(g, opts));
}

}  // namespace anum
