#include "anum/sequence_shape.hpp"

#include "anum/error.hpp"

namespace anum {

SequenceShape analyze(std::span<const BigInt> seq) {
  if (seq.empty()) throw Error(ErrorKind::EmptySequence, "cannot analyze an empty sequence");
  std::size_t len = seq.size();
  while (len > 0 && sgn(seq[len - 1]) == 0) --len;
  const auto body = seq.first(len);

  SequenceShape shape;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if (body[i] > body[shape.peak_index]) shape.peak_index = i;
  }

  bool descended = false;
  shape.unimodal = true;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if (body[i] < body[i - 1]) descended = true;
    if (body[i] > body[i - 1] && descended) {
      shape.unimodal = false;
      break;
    }
  }

  // Nondecreasing through the index of the second-to-last nonzero term.
  std::size_t second_last = 0;
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    if (sgn(body[i]) != 0) second_last = i;
  }
  shape.tail_peaked = true;
  for (std::size_t i = 1; i <= second_last; ++i) {
    if (body[i] < body[i - 1]) {
      shape.tail_peaked = false;
      break;
    }
  }

  shape.log_concave = true;
  for (std::size_t i = 1; i + 1 < body.size(); ++i) {
    if (body[i] * body[i] < body[i - 1] * body[i + 1]) {
      shape.log_concave = false;
      shape.first_violation = i;
      break;
    }
  }
  return shape;
}

}  // namespace anum
