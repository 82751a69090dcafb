#include "anum/closed_forms.hpp"

#include <boost/math/constants/constants.hpp>

#include <string>

#include "anum/error.hpp"

namespace anum {

std::vector<BigInt> zigzag_table(int max_k) {
  if (max_k < 0) throw Error(ErrorKind::BadParams, "zigzag index must be >= 0");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(max_k) + 1);
  // Row r of the Seidel-Entringer triangle: E(r,0) = [r = 0],
  // E(r,c) = E(r,c-1) + E(r-1,r-c); A_r = E(r,r).
  std::vector<BigInt> prev{BigInt(1)};
  out.push_back(1);
  for (int r = 1; r <= max_k; ++r) {
    std::vector<BigInt> row(static_cast<std::size_t>(r) + 1);
    for (int c = 1; c <= r; ++c) {
      row[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - 1)] + prev[static_cast<std::size_t>(r - c)];
    }
    out.push_back(row.back());
    prev = std::move(row);
  }
  return out;
}

BigInt zigzag(int k) { return zigzag_table(k).back(); }

std::vector<Rational> bernoulli_table(int max_m) {
  if (max_m < 0) throw Error(ErrorKind::BadParams, "Bernoulli index must be >= 0");
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(max_m) + 1);
  b.emplace_back(1);
  for (int m = 1; m <= max_m; ++m) {
    Rational sum;
    for (int j = 0; j < m; ++j) {
      sum += Rational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j))) * b[static_cast<std::size_t>(j)];
    }
    Rational value = -sum / Rational(m + 1);
    value.canonicalize();
    b.push_back(value);
  }
  return b;
}

Rational bernoulli(int m) { return bernoulli_table(m).back(); }

ASequence star_a_sequence(int n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "star needs n >= 1");
  const int top = n / 2;
  const auto zz = zigzag_table(std::max(1, 2 * top - 1));
  ASequence out(static_cast<std::size_t>(top) + 1);
  out[0] = 1;
  for (int i = 1; i <= top; ++i) {
    out[static_cast<std::size_t>(i)] =
        binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(2 * i - 1)) * zz[static_cast<std::size_t>(2 * i - 1)];
  }
  return out;
}

ASequence path_a_sequence(int n) {
  if (n < 0) throw Error(ErrorKind::BadParams, "path needs n >= 0");
  ASequence row{BigInt(1)};
  for (int m = 0; m < n; ++m) {
    ASequence next(static_cast<std::size_t>((m + 1) / 2) + 1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (i < row.size()) next[i] += row[i];
      if (i >= 1 && i - 1 < row.size()) next[i] += row[i - 1];
    }
    row = std::move(next);
  }
  return row;
}

ASequence cycle_a_sequence(int n) {
  if (n < 3) throw Error(ErrorKind::BadParams, "cycle needs n >= 3");
  ASequence out(static_cast<std::size_t>(n / 2) + 1);
  for (int i = 0; 2 * i <= n; ++i) {
    BigInt c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    if (2 * i == n) c /= 2;
    out[static_cast<std::size_t>(i)] = c;
  }
  return out;
}

std::optional<ASequence> family_closed_form(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path: return path_a_sequence(spec.n);
    case FamilyKind::Cycle: return cycle_a_sequence(spec.n);
    case FamilyKind::Star: return star_a_sequence(spec.n);
    case FamilyKind::Complete:
    case FamilyKind::CompleteBipartite: return std::nullopt;
  }
  return std::nullopt;
}

Real to_real(const BigInt& v) { return Real(v.get_str()); }

Real to_real(const Rational& v) { return to_real(BigInt(v.get_num())) / to_real(BigInt(v.get_den())); }

namespace {

Real factorial_real(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return to_real(f);
}

void require_positive(int i) {
  if (i < 1) throw Error(ErrorKind::BadParams, "index must be a positive integer");
}

}  // namespace

RealInterval bernoulli_bounds(int i) {
  require_positive(i);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  const Real core = 2 * factorial_real(2 * i) / pow(two_pi, 2 * i);
  const Real quarter_power = pow(Real(2), -2 * i);
  return {core / (1 - quarter_power), core / (1 - 2 * quarter_power)};
}

RealInterval tangent_bounds(int i) {
  const auto b = bernoulli_bounds(i);
  const Real p = pow(Real(2), 2 * i);
  const Real factor = p * (p - 1) / (2 * i);
  return {factor * b.lower, factor * b.upper};
}

PiSquaredEnclosure pi_squared_enclosure() {
  PiSquaredEnclosure out{Rational("98696044010/10000000000"), Rational("98696044011/10000000000")};
  out.lower.canonicalize();
  out.upper.canonicalize();
  return out;
}

bool star_gap_inequality(int k) {
  if (k < 3) throw Error(ErrorKind::BadParams, "the star gap inequality needs k >= 3");
  const BigInt one(1);
  const BigInt lhs_power = (one << static_cast<mp_bitcnt_t>(2 * k - 2)) - 1;
  const BigInt rhs_power = (one << static_cast<mp_bitcnt_t>(2 * k - 1)) - 4;
  const Rational lhs_upper = 4 * pi_squared_enclosure().upper * Rational(BigInt(k) * lhs_power);
  const Rational rhs = Rational(BigInt(48) * (k - 1) * rhs_power);
  return lhs_upper < rhs;
}

bool star_gap_holds(int k) {
  if (!star_gap_inequality(k)) return false;
  const auto seq = star_a_sequence(2 * k + 1);
  return seq[static_cast<std::size_t>(k - 1)] < seq[static_cast<std::size_t>(k)];
}

}  // namespace anum
