#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace anum {

/// Unbounded signed integer used for every a-number, b-number and closed form.
using BigInt = mpz_class;
/// Exact rational (Bernoulli numbers, inequality enclosures).
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Value as int64 when representable.
inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

inline BigInt from_int64(std::int64_t v) {
  BigInt out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace anum
