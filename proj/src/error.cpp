#include "anum/error.hpp"

namespace anum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::VertexCountExceeded: return "VertexCountExceeded";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::NotAnElement: return "NotAnElement";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::NotNewlyEven: return "NotNewlyEven";
    case ErrorKind::NotASubgraph: return "NotASubgraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptySequence: return "EmptySequence";
  }
  return "Unknown";
}

}  // namespace anum
