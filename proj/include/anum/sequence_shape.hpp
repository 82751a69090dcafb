#pragma once

#include <optional>
#include <span>

#include "anum/bigint.hpp"

namespace anum {

struct SequenceShape {
  bool unimodal = false;
  bool tail_peaked = false;
  bool log_concave = false;
  /// First index attaining the maximum.
  std::size_t peak_index = 0;
  /// First interior index i with a_i^2 < a_{i-1} a_{i+1}.
  std::optional<std::size_t> first_violation;
};

/// Shape of an eventually-zero sequence of non-negative integers. Trailing
/// zeros are ignored throughout. Throws EmptySequence.
///   unimodal: no strict decrease is followed by a strict increase
///   tail_peaked: nondecreasing up to the second-to-last nonzero term
///   log_concave: a_i^2 >= a_{i-1} a_{i+1} at every interior index
SequenceShape analyze(std::span<const BigInt> seq);

}  // namespace anum
