#include "anum/chain_poset.hpp"

#include <string>

#include "anum/engine.hpp"
#include "anum/error.hpp"

namespace anum {

CompPoset::CompPoset(const Graph& g) : parent_(g) {
  const int n = g.order();
  if (n % 2 != 0) throw Error(ErrorKind::OddOrder, "comp(G) needs an even-order graph, got " + std::to_string(n));
  if (n > kMaxPosetOrder) {
    throw Error(ErrorKind::TooLarge, "comp(G) limited to " + std::to_string(kMaxPosetOrder) + " vertices");
  }
  const Mask top = full_mask(n);
  index_.assign(static_cast<std::size_t>(top) + 1, -1);
  for (Mask s = 0;; ++s) {
    if (s == top || is_even_cover(g, s)) {
      index_[static_cast<std::size_t>(s)] = static_cast<int>(elements_.size());
      elements_.emplace_back(s);
    }
    if (s == top) break;
  }
}

CompPoset comp_poset(const Graph& g) { return CompPoset(g); }

bool CompPoset::contains(VertexSet s) const noexcept { return index_of(s).has_value(); }

std::optional<std::size_t> CompPoset::index_of(VertexSet s) const noexcept {
  if (!s.is_subset_of(top())) return std::nullopt;
  const int idx = index_[static_cast<std::size_t>(s.bits())];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::vector<std::vector<BigInt>> CompPoset::chain_count_matrix() const {
  const auto width = static_cast<std::size_t>(rank()) + 1;
  std::vector<std::vector<BigInt>> counts(elements_.size(), std::vector<BigInt>(width));
  const Mask all = top().bits();
  // Supersets have larger masks, so walking backwards finishes them first.
  for (std::size_t e = elements_.size(); e-- > 0;) {
    const Mask base = elements_[e].bits();
    auto& row = counts[e];
    if (base == all) {
      row[0] = 1;
      continue;
    }
    const Mask free = all & ~base;
    for (Mask extra = free; extra != 0; extra = (extra - 1) & free) {
      const int up = index_[static_cast<std::size_t>(base | extra)];
      if (up < 0) continue;
      const auto& above = counts[static_cast<std::size_t>(up)];
      for (std::size_t k = 1; k < width; ++k) row[k] += above[k - 1];
    }
  }
  return counts;
}

BigInt ChainCountTable::at(int k) const {
  if (k < 0 || k >= static_cast<int>(counts.size())) return BigInt(0);
  return counts[static_cast<std::size_t>(k)];
}

ChainCountTable chain_counts(const CompPoset& poset, VertexSet base) {
  const auto idx = poset.index_of(base);
  if (!idx) throw Error(ErrorKind::NotAnElement, "base set is not an element of comp(G)");
  const auto matrix = poset.chain_count_matrix();
  const auto& row = matrix[*idx];
  const auto len = static_cast<std::size_t>(poset.rank() - base.size() / 2) + 1;
  return ChainCountTable{base, std::vector<BigInt>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(len))};
}

ChainCountTable chain_counts(const Graph& g, VertexSet base) { return chain_counts(CompPoset(g), base); }

BigInt sa_via_chains(const Graph& g) {
  const CompPoset poset(g);
  const auto counts = chain_counts(poset, VertexSet{});
  BigInt total;
  for (std::size_t k = 0; k < counts.counts.size(); ++k) {
    if (k % 2 == 0) {
      total += counts.counts[k];
    } else {
      total -= counts.counts[k];
    }
  }
  return total;
}

namespace {

void extend_chains(const CompPoset& poset, Chain& current, int remaining, std::vector<Chain>& out) {
  const VertexSet last = current.sets.back();
  if (remaining == 0) {
    if (last == poset.top()) out.push_back(current);
    return;
  }
  for (VertexSet next : poset.elements()) {
    if (next == last || !last.is_subset_of(next)) continue;
    current.sets.push_back(next);
    extend_chains(poset, current, remaining - 1, out);
    current.sets.pop_back();
  }
}

}  // namespace

std::vector<Chain> enumerate_chains(const CompPoset& poset, VertexSet from, int k) {
  if (poset.parent().order() > kMaxChainEnumerationOrder) {
    throw Error(ErrorKind::TooLarge,
                "chain enumeration limited to " + std::to_string(kMaxChainEnumerationOrder) + " vertices");
  }
  if (!poset.contains(from)) throw Error(ErrorKind::NotAnElement, "start set is not an element of comp(G)");
  std::vector<Chain> out;
  if (k < 0) return out;
  Chain current{{from}};
  extend_chains(poset, current, k, out);
  return out;
}

ChainClass classify_chain(const Graph& g, EdgePair e, const Chain& chain) {
  const Graph augmented = add_edge(g, e);
  const VertexSet top = g.vertices();
  if (chain.sets.empty() || !chain.sets.front().empty() || chain.sets.back() != top) {
    throw Error(ErrorKind::NotAChain, "chain must run from the empty set to V(G)");
  }
  for (std::size_t i = 0; i < chain.sets.size(); ++i) {
    const VertexSet s = chain.sets[i];
    if (i > 0 && (s == chain.sets[i - 1] || !chain.sets[i - 1].is_subset_of(s))) {
      throw Error(ErrorKind::NotAChain, "chain members must increase strictly");
    }
    if (!s.is_subset_of(top) || (s != top && !is_even_cover(augmented, s.bits()))) {
      throw Error(ErrorKind::NotAChain, "chain member is not an element of comp(G+e)");
    }
  }
  for (VertexSet s : chain.sets) {
    if (!is_even_cover(g, s.bits())) return ChainClass{s};
  }
  return ChainClass{};
}

namespace {

void require_newly_even(const Graph& g, const Graph& augmented, VertexSet j) {
  if (!j.is_subset_of(g.vertices()) || !is_even_cover(augmented, j.bits()) || is_even_cover(g, j.bits())) {
    throw Error(ErrorKind::NotNewlyEven, "J must lie in EC(G+e) but not in EC(G)");
  }
}

}  // namespace

BigInt count_singular_chains(const Graph& g, EdgePair e, VertexSet j, int k) {
  const Graph augmented = add_edge(g, e);
  require_newly_even(g, augmented, j);
  if (k < 1) throw Error(ErrorKind::BadParams, "chain length must be at least 1");
  const CompPoset poset(augmented);
  BigInt count;
  for (const auto& chain : enumerate_chains(poset, VertexSet{}, k)) {
    const auto cls = classify_chain(g, e, chain);
    if (cls.singular_at == j) ++count;
  }
  return count;
}

BigInt count_singular_chains_by_split(const Graph& g, EdgePair e, VertexSet j, int k) {
  const Graph augmented = add_edge(g, e);
  require_newly_even(g, augmented, j);
  if (k < 1) throw Error(ErrorKind::BadParams, "chain length must be at least 1");

  const auto upper = chain_counts(CompPoset(augmented), j);
  const LabeledGraph inside = induced(g, j);

  // lower[q] = Σ_{J' ∈ EC(G|_J)} |C_q(∅; G|_{J'})|
  std::vector<BigInt> lower(static_cast<std::size_t>(k));
  for (VertexSet local : even_cover_family(inside.graph)) {
    const LabeledGraph piece = induced(inside.graph, local);
    const auto counts = chain_counts(CompPoset(piece.graph), VertexSet{});
    for (int q = 0; q < k; ++q) lower[static_cast<std::size_t>(q)] += counts.at(q);
  }

  BigInt total;
  for (int p = 0; p < k; ++p) total += upper.at(p) * lower[static_cast<std::size_t>(k - 1 - p)];
  return total;
}

}  // namespace anum
