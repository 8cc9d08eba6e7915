#pragma once

#include "mateq/linear_system.hpp"

namespace mateq {

/// A symbolic affine map h(Y) = constant + sum of sign * left * Y * right over
/// one field, from y_rows x y_cols matrices to matrices shaped like constant.
/// The term list is kept symbolic (not collapsed into one vectorized matrix)
/// so callers can print the closed form exactly as constructed.
struct AffineGenerator {
  Matrix constant;
  std::vector<LinearTerm> terms;
  std::size_t y_rows = 0;
  std::size_t y_cols = 0;

  /// Shape/field coherence of all terms against the input and output shapes.
  void validate() const;
};

/// Evaluate h at y (ShapeMismatch/FieldMismatch on bad input).
[[nodiscard]] Matrix apply(const AffineGenerator& h, const Matrix& y);

/// The vectorized linear part: sum of sign * kron(right^T, left), an
/// (out_rows*out_cols) x (y_rows*y_cols) matrix.
[[nodiscard]] Matrix linear_matrix_of(const AffineGenerator& h);

/// Verdict of the exact idempotence decision h(h(Y)) == h(Y) for all Y.
/// With M the vectorized linear part and c the constant: h is idempotent as a
/// map iff M*M == M and M*vec(c) == 0. The defect h(h(0)) - h(0) (that is,
/// the linear part applied to the constant) is zero exactly when the constant
/// condition holds.
struct ReproVerdict {
  bool reproductive = false;       ///< both conditions hold
  bool linear_idempotent = false;  ///< M*M == M
  bool constant_fixed = false;     ///< M*vec(constant) == 0
  Matrix defect;                   ///< h(h(0)) - h(0), zero iff constant_fixed
};

/// Requires square M, i.e. output shape == input shape (NotComposable
/// otherwise — h cannot be composed with itself).
[[nodiscard]] ReproVerdict is_reproductive(const AffineGenerator& h);

/// The image {h(Y) : all Y} as an affine solution set: particular = constant,
/// basis = the pivot columns of the vectorized linear part, unvectorized
/// (deterministic: column-space basis read off the RREF pivot columns).
[[nodiscard]] AffineSolutionSet image_of(const AffineGenerator& h);

}  // namespace mateq
