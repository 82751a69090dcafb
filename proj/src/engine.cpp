#include "anum/engine.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "anum/error.hpp"

namespace anum {

bool is_even_cover(const Graph& g, Mask s) noexcept {
  for (Mask rest = s; rest != 0;) {
    const Mask c = component_of(g, s, std::countr_zero(rest));
    if (std::popcount(c) % 2 != 0) return false;
    rest &= ~c;
  }
  return true;
}

namespace {

void check_order(const Graph& g, const EngineOptions& opts) {
  if (g.order() > opts.max_order) {
    throw Error(ErrorKind::TooLarge, "graph order " + std::to_string(g.order()) +
                                         " exceeds the engine cap of " + std::to_string(opts.max_order));
  }
}

}  // namespace

SaTable sa_all_subsets(const Graph& g, const EngineOptions& opts) {
  check_order(g, opts);
  const bool parallel = opts.policy == ExecPolicy::Parallel;

  std::vector<std::int64_t> fast;
  const bool fits = parallel ? kernels::sa_table_parallel(g, fast) : kernels::sa_table_serial(g, fast);
  std::vector<BigInt> values;
  if (fits) {
    values.reserve(fast.size());
    for (std::int64_t v : fast) values.push_back(from_int64(v));
  } else if (parallel) {
    kernels::sa_table_parallel(g, values);
  } else {
    kernels::sa_table_serial(g, values);
  }
  return SaTable(g, std::move(values));
}

BigInt sa(const Graph& g, const EngineOptions& opts) {
  BigInt value = sa_all_subsets(g, opts).full();
  if (g.order() % 2 == 0) {
    // a = (-1)^{n/2} sa whenever the order is even.
    const BigInt signed_a = (g.order() / 2) % 2 == 0 ? value : BigInt(-value);
    if (signed_a != abs(value)) {
      throw std::logic_error("sign law violated for an even-order graph: sa = " + value.get_str());
    }
  }
  return value;
}

BigInt a_number(const Graph& g, const EngineOptions& opts) { return abs(sa(g, opts)); }

ASequence a_sequence(const SaTable& table) {
  const int n = table.parent().order();
  ASequence out(static_cast<std::size_t>(n / 2 + 1));
  const auto values = table.values();
  for (std::size_t s = 0; s < values.size(); ++s) {
    const int size = std::popcount(static_cast<Mask>(s));
    if (size % 2 == 0) out[static_cast<std::size_t>(size / 2)] += abs(values[s]);
  }
  return out;
}

ASequence a_sequence(const Graph& g, const EngineOptions& opts) { return a_sequence(sa_all_subsets(g, opts)); }

BigInt b_number(const SaTable& table) {
  BigInt sum;
  for (const auto& v : table.values()) sum += v;
  return sum;
}

BigInt b_number(const Graph& g, const EngineOptions& opts) { return b_number(sa_all_subsets(g, opts)); }

std::vector<BigInt> b_all_subsets(const SaTable& table) {
  std::vector<BigInt> z(table.values().begin(), table.values().end());
  const int n = table.parent().order();
  for (int v = 0; v < n; ++v) {
    const Mask b = bit(v);
    for (std::size_t s = 0; s < z.size(); ++s) {
      if (static_cast<Mask>(s) & b) z[s] += z[s ^ static_cast<std::size_t>(b)];
    }
  }
  return z;
}

bool b_sign_law_holds(const Graph& g, Mask s, const BigInt& b) {
  const int n = std::popcount(s);
  const auto parts = connected_components(g, VertexSet(s));
  if (n % 2 != 0) return abs(b) == (((n - 1) / 2) % 2 == 0 ? b : BigInt(-b));
  for (VertexSet c : parts) {
    if (c.size() % 2 == 0) return b == 0;
  }
  const int exponent = n / 2 - static_cast<int>(parts.size()) / 2;
  return abs(b) == (exponent % 2 == 0 ? b : BigInt(-b));
}

bool b_component_sign_holds(const Graph& g, Mask s, const BigInt& b) {
  const auto parts = connected_components(g, VertexSet(s));
  for (VertexSet c : parts) {
    if (c.size() % 2 == 0) return b == 0;
  }
  const int exponent = (std::popcount(s) - static_cast<int>(parts.size())) / 2;
  return abs(b) == (exponent % 2 == 0 ? b : BigInt(-b));
}

std::vector<VertexSet> even_cover_family(const Graph& g, const EngineOptions& opts) {
  check_order(g, opts);
  std::vector<VertexSet> out;
  const Mask top = full_mask(g.order());
  for (Mask s = 0;; ++s) {
    if (is_even_cover(g, s)) out.emplace_back(s);
    if (s == top) break;
  }
  return out;
}

}  // namespace anum
