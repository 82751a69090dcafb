#pragma once

// Shared per-subset step of the sa DP. Private to the engine sources.

#include <bit>
#include <cstdint>
#include <vector>

#include "anum/bigint.hpp"
#include "anum/graph.hpp"

namespace anum::detail {

template <class T>
struct Checked;

template <>
struct Checked<std::int64_t> {
  static bool add(std::int64_t& acc, std::int64_t x) { return !__builtin_add_overflow(acc, x, &acc); }
  static bool mul(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_mul_overflow(a, b, &out); }
  static bool negate(std::int64_t& x) { return !__builtin_sub_overflow(std::int64_t{0}, x, &x); }
  static bool is_zero(std::int64_t x) { return x == 0; }
};

template <>
struct Checked<BigInt> {
  static bool add(BigInt& acc, const BigInt& x) {
    acc += x;
    return true;
  }
  static bool mul(const BigInt& a, const BigInt& b, BigInt& out) {
    out = a * b;
    return true;
  }
  static bool negate(BigInt& x) {
    mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    return true;
  }
  static bool is_zero(const BigInt& x) { return sgn(x) == 0; }
};

/// Computes values[s] from values of strict subsets of s. Returns false on
/// overflow of T.
///   disconnected: product of the lowest component and the rest
///   connected, odd order: 0
///   connected, even order: minus the sum over all proper subsets
template <class T>
bool sa_step(const Graph& g, Mask s, std::vector<T>& values) {
  using Ops = Checked<T>;
  const auto idx = [](Mask m) { return static_cast<std::size_t>(m); };
  const Mask low = component_of(g, s, std::countr_zero(s));
  if (low != s) {
    const T& x = values[idx(low)];
    const T& y = values[idx(s & ~low)];
    if (Ops::is_zero(x) || Ops::is_zero(y)) {
      values[idx(s)] = T(0);
      return true;
    }
    return Ops::mul(x, y, values[idx(s)]);
  }
  if (std::popcount(s) % 2 != 0) {
    values[idx(s)] = T(0);
    return true;
  }
  T sum(0);
  for (Mask t = (s - 1) & s;; t = (t - 1) & s) {
    if (!Ops::add(sum, values[idx(t)])) return false;
    if (t == 0) break;
  }
  if (!Ops::negate(sum)) return false;
  values[idx(s)] = std::move(sum);
  return true;
}

}  // namespace anum::detail
