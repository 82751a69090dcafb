#pragma once

#include <vector>

#include "anum/engine.hpp"
#include "anum/graph.hpp"

namespace anum {

/// One J ∈ EC(G+e) \ EC(G) with its weight |b(G|_J)| and the a-sequence of
/// (G+e)*_J. The tail is stored unshifted.
struct DecompositionTerm {
  VertexSet j;
  BigInt weight;
  ASequence tail;
};

struct DecompositionReport {
  Graph base;
  EdgePair edge;
  std::vector<DecompositionTerm> terms;
  ASequence base_sequence;  // a-sequence of G
  ASequence lhs;            // a-sequence of G+e, straight from the engine
  ASequence rhs;            // base_sequence plus the shifted, weighted tails
  bool rhs_check = false;
};

std::vector<DecompositionTerm> delta_terms(const Graph& g, EdgePair e, const EngineOptions& opts = {});

/// Adds weight * tail, shifted right by `shift`, into `acc` (growing it as needed).
void accumulate_shifted(ASequence& acc, const BigInt& weight, const ASequence& tail, std::size_t shift);

/// Evaluates both sides of the edge-addition identity independently and
/// compares them exactly.
DecompositionReport verify_decomposition(const Graph& g, EdgePair e, const EngineOptions& opts = {});

/// a(G+e) == a(G) + Σ_J |b(G|_J)| · a((G+e)*_J). Throws OddOrder for odd |V|.
bool verify_scalar_decomposition(const Graph& g, EdgePair e, const EngineOptions& opts = {});

/// a_i(H) <= a_i(G) for every i, after padding H with isolated vertices.
/// Throws NotASubgraph unless H (identity labels) is a subgraph of G.
bool monotonicity_check(const Graph& h, const Graph& g, const EngineOptions& opts = {});

/// Termwise a <= b with missing entries read as zero.
bool termwise_le(const ASequence& a, const ASequence& b);

}  // namespace anum
