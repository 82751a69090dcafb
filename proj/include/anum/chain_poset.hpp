#pragma once

#include <optional>
#include <span>
#include <vector>

#include "anum/bigint.hpp"
#include "anum/graph.hpp"

namespace anum {

inline constexpr int kMaxPosetOrder = 12;
inline constexpr int kMaxChainEnumerationOrder = 8;

/// comp(G) = EC(G) ∪ {V(G)} for an even-order graph, ordered by inclusion.
/// Elements are kept sorted ascending by mask.
class CompPoset {
 public:
  /// Throws OddOrder for odd |V|, TooLarge above kMaxPosetOrder vertices.
  explicit CompPoset(const Graph& g);

  const Graph& parent() const noexcept { return parent_; }
  std::span<const VertexSet> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// i, where |V(G)| = 2i.
  int rank() const noexcept { return parent_.order() / 2; }
  VertexSet top() const noexcept { return parent_.vertices(); }

  bool contains(VertexSet s) const noexcept;
  std::optional<std::size_t> index_of(VertexSet s) const noexcept;

  /// |C_k(I;G)| for every element I and every 0 <= k <= rank(), by DP from the
  /// top: N_0(I) = [I = V], N_k(I) = Σ_{I ⊊ J} N_{k-1}(J).
  /// Row e of the result belongs to elements()[e].
  std::vector<std::vector<BigInt>> chain_count_matrix() const;

 private:
  Graph parent_;
  std::vector<VertexSet> elements_;
  std::vector<int> index_;  // mask -> element index, -1 when absent
};

CompPoset comp_poset(const Graph& g);

/// |C_k(I;G)| for k = 0 .. i - |I|/2.
struct ChainCountTable {
  VertexSet base;
  std::vector<BigInt> counts;

  /// Zero outside the stored range.
  BigInt at(int k) const;
};

/// Throws NotAnElement when I ∉ comp(G).
ChainCountTable chain_counts(const CompPoset& poset, VertexSet base);
ChainCountTable chain_counts(const Graph& g, VertexSet base);

/// Σ_k (-1)^k |C_k(∅;G)|. Throws OddOrder / TooLarge.
BigInt sa_via_chains(const Graph& g);

/// I_0 ⊊ I_1 ⊊ ... ⊊ I_k.
struct Chain {
  std::vector<VertexSet> sets;

  int length() const noexcept { return static_cast<int>(sets.size()) - 1; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Every chain from `from` to V(G) of length k inside the poset.
/// Throws TooLarge above kMaxChainEnumerationOrder vertices.
std::vector<Chain> enumerate_chains(const CompPoset& poset, VertexSet from, int k);

/// Regular, or singular at the first member that is not in EC(G).
struct ChainClass {
  std::optional<VertexSet> singular_at;

  bool regular() const noexcept { return !singular_at.has_value(); }
};

/// Classifies a chain of comp(G+e) that starts at ∅. Throws NotAChain when the
/// chain does not start at ∅, end at V, increase strictly, or stay in comp(G+e).
ChainClass classify_chain(const Graph& g, EdgePair e, const Chain& chain);

/// Number of chains in C_k(∅;G+e) singular at J, by explicit enumeration.
/// Throws NotNewlyEven unless J ∈ EC(G+e) \ EC(G).
BigInt count_singular_chains(const Graph& g, EdgePair e, VertexSet j, int k);

/// The same count assembled from the split
///   Σ_{p+q=k-1} |C_p(J;G+e)| · Σ_{J' ∈ EC(G|_J)} |C_q(∅;G|_{J'})|.
BigInt count_singular_chains_by_split(const Graph& g, EdgePair e, VertexSet j, int k);

}  // namespace anum
