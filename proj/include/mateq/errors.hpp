#pragma once

#include <stdexcept>
#include <string>

namespace mateq {

/// Machine-checkable reason attached to every library error.
enum class ErrorCode {
  FieldMismatch,     ///< operands tagged with different fields
  DivisionByZero,    ///< scalar division (or inversion) of zero
  NotEnumerable,     ///< the rationals cannot be enumerated
  DimensionMismatch, ///< operand dimensions are incompatible
  NotSquare,         ///< a square matrix was required
  CapExceeded,       ///< an enumeration would exceed the requested cap
  ShapeMismatch,     ///< two objects with different unknown shapes were mixed
  IndexTooSmall,     ///< an exponent is below the matrix index and no override was given
  InvalidOneInverse, ///< a user-supplied candidate fails its defining identity
  Inconsistent,      ///< the system has no solution, so the request is undefined
  NotASolution,      ///< a supplied particular solution does not solve the system
  X1Unverified,      ///< internal defect: canonical common solution failed verification
  NotComposable,     ///< generators with incompatible shapes cannot be composed
  ParseError,        ///< malformed input text
  ValidationError,   ///< well-formed input violating a documented precondition
};

/// Short stable tag used in diagnostics ("FieldMismatch", ...).
[[nodiscard]] const char* to_string(ErrorCode code) noexcept;

/// Exception carrying an ErrorCode plus a human-readable precondition message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string("[") + to_string(code) + "] " + message),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mateq
