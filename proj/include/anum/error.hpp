#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anum {

enum class ErrorKind {
  VertexCountExceeded,
  LoopEdge,
  OutOfRange,
  BadParams,
  TooLarge,
  OddOrder,
  NotAnElement,
  NotAChain,
  NotNewlyEven,
  NotASubgraph,
  ParseError,
  EmptySequence,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// the CLI can map it onto an exit code and a machine-readable error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// ParseError with the offending 1-based line number (0 when not line-based).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::ParseError, what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace anum
