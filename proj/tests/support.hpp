#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "anum/bigint.hpp"
#include "anum/error.hpp"

namespace anum::test {

/// Runs fn and returns the kind of the anum::Error it throws.
template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an anum::Error";
  return ErrorKind::ParseError;
}

inline std::vector<BigInt> big(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline std::vector<BigInt> big(const std::vector<std::int64_t>& values) {
  std::vector<BigInt> out;
  for (auto v : values) out.push_back(from_int64(v));
  return out;
}

}  // namespace anum::test
