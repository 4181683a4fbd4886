#pragma once

#include <stdexcept>
#include <string>

namespace icis {

enum class ErrorKind {
  Syntax,
  UnknownVariable,
  InvalidInput,
  NonHomogeneous,
  NotIsolated,
  NotCompleteIntersection,
  Hypersurface,
  UnsupportedTwoJet,
  PositiveDimensionalSingularLocus,
  IrrationalSingularPoint,
  ReductionFailed,
  IndexOutOfRange,
  ExcludedModulus,
  UnknownNormalForm,
  InternalInconsistency,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the zero-based character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& what, std::size_t position)
      : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace icis
