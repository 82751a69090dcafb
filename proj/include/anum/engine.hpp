#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anum/bigint.hpp"
#include "anum/graph.hpp"

namespace anum {

/// (a_0, a_1, ..., a_{⌊n/2⌋}); a_0 = 1 for every graph.
using ASequence = std::vector<BigInt>;

enum class ExecPolicy { Serial, Parallel };

struct EngineOptions {
  /// Hard cap on the order of graphs handed to the subset DP (cost 3^n).
  int max_order = 16;
  ExecPolicy policy = ExecPolicy::Serial;
};

/// sa(G|_S) for every S ⊆ V(G), indexed by the bitmask of S.
class SaTable {
 public:
  SaTable(Graph parent, std::vector<BigInt> values)
      : parent_(std::move(parent)), values_(std::move(values)) {}

  const Graph& parent() const noexcept { return parent_; }
  const BigInt& operator[](VertexSet s) const { return values_[static_cast<std::size_t>(s.bits())]; }
  const BigInt& at(Mask s) const { return values_.at(static_cast<std::size_t>(s)); }
  std::span<const BigInt> values() const noexcept { return values_; }
  const BigInt& full() const { return values_.back(); }

 private:
  Graph parent_;
  std::vector<BigInt> values_;
};

/// True when no connected component of G|_S has odd order (∅ included).
bool is_even_cover(const Graph& g, Mask s) noexcept;

SaTable sa_all_subsets(const Graph& g, const EngineOptions& opts = {});

BigInt sa(const Graph& g, const EngineOptions& opts = {});
BigInt a_number(const Graph& g, const EngineOptions& opts = {});

ASequence a_sequence(const SaTable& table);
ASequence a_sequence(const Graph& g, const EngineOptions& opts = {});

BigInt b_number(const SaTable& table);
BigInt b_number(const Graph& g, const EngineOptions& opts = {});

/// b(G|_S) for every S: the subset-sum (zeta) transform of the table.
std::vector<BigInt> b_all_subsets(const SaTable& table);

/// The three sign rules for b(G|_S) = b, applied as stated:
///   |S| odd: |b| = (-1)^{(|S|-1)/2} b
///   some component of even order: b = 0
///   |S| = 2i, 2j components, all odd: |b| = (-1)^{i-j} b
/// The first rule is only reliable for connected G|_S (three isolated
/// vertices have b = 1).
bool b_sign_law_holds(const Graph& g, Mask s, const BigInt& b);

/// b = 0 when G|_S has an even component, otherwise |b| = (-1)^{(|S|-c)/2} b
/// for c components. Follows from multiplicativity of b.
bool b_component_sign_holds(const Graph& g, Mask s, const BigInt& b);

/// EC(G), sorted ascending by mask.
std::vector<VertexSet> even_cover_family(const Graph& g, const EngineOptions& opts = {});

/// The DP kernels behind sa_all_subsets. The int64 variants return false on
/// overflow (the table contents are then unspecified); the BigInt variants
/// cannot overflow. The serial kernels walk masks in numeric order; the
/// OpenMP kernels walk popcount layers, each layer in parallel.
namespace kernels {

bool sa_table_serial(const Graph& g, std::vector<std::int64_t>& out);
bool sa_table_parallel(const Graph& g, std::vector<std::int64_t>& out);
void sa_table_serial(const Graph& g, std::vector<BigInt>& out);
void sa_table_parallel(const Graph& g, std::vector<BigInt>& out);

}  // namespace kernels

}  // namespace anum
