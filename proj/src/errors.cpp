#include "mateq/errors.hpp"

namespace mateq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotEnumerable: return "NotEnumerable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexTooSmall: return "IndexTooSmall";
    case ErrorCode::InvalidOneInverse: return "InvalidOneInverse";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::X1Unverified: return "X1Unverified";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace mateq
