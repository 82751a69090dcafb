#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

#include "anum/bigint.hpp"
#include "anum/engine.hpp"

namespace anum {

/// 100 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_100;

/// Euler zigzag numbers A_0 .. A_max via the boustrophedon (Entringer) triangle.
std::vector<BigInt> zigzag_table(int max_k);
BigInt zigzag(int k);

/// Bernoulli numbers B_0 .. B_max (B_1 = -1/2) from Σ_{j<=m} C(m+1, j) B_j = 0.
std::vector<Rational> bernoulli_table(int max_m);
Rational bernoulli(int m);

/// K_{1,n-1}: a_0 = 1, a_i = C(n-1, 2i-1) A_{2i-1}. Requires n >= 1.
ASequence star_a_sequence(int n);

/// P_n: rows of the Catalan triangle, built from (1) by
/// a_i(P_{n+1}) = a_{i-1}(P_n) + a_i(P_n), truncated to ⌊(n+1)/2⌋ + 1 terms.
ASequence path_a_sequence(int n);

/// C_n, n >= 3: a_i = C(n, i) for 2i < n and a_{n/2} = C(n, n/2) / 2.
ASequence cycle_a_sequence(int n);

/// Closed form for a family member, when one exists (complete graphs and
/// complete bipartite graphs have none here).
std::optional<ASequence> family_closed_form(const FamilySpec& spec);

struct RealInterval {
  Real lower;
  Real upper;
};

/// C_i < |B_{2i}| < D_i with C_i, D_i = 2(2i)!/(2π)^{2i} / (1 - 2^{-2i}), / (1 - 2^{1-2i}).
RealInterval bernoulli_bounds(int i);

/// The same sandwich carried over to A_{2i-1} by 2^{2i}(2^{2i}-1)/(2i).
RealInterval tangent_bounds(int i);

Real to_real(const BigInt& v);
Real to_real(const Rational& v);

/// Rational enclosure of π².
struct PiSquaredEnclosure {
  Rational lower;
  Rational upper;
};
PiSquaredEnclosure pi_squared_enclosure();

/// (2π)^2 k (2^{2k-2} - 1) < 48 (k-1)(2^{2k-1} - 4), decided with exact
/// rationals and the upper end of the π² enclosure. Requires k >= 3.
bool star_gap_inequality(int k);

/// star_gap_inequality(k) and a_{k-1}(K_{1,2k}) < a_k(K_{1,2k}) on exact values.
bool star_gap_holds(int k);

}  // namespace anum
