#pragma once

#include "mateq/linear_system.hpp"
#include "mateq/matrix.hpp"

namespace mateq {

/// A verified inner inverse: g satisfies a * g * a == a by construction.
struct OneInverseCertificate {
  Matrix g;                 ///< cols(a) x rows(a)
  std::size_t input_rank = 0;
  std::string construction;  ///< "rank-normal-form" or "user-supplied"
};

/// Does g satisfy the defining identity a * g * a == a (shape-checked)?
[[nodiscard]] bool is_one_inverse(const Matrix& a, const Matrix& g);

/// Deterministic canonical inner inverse via the rank normal form: with
/// invertible T (the RREF transform, T*a = R) and the column operations Q that
/// finish reducing R to [[I_r, 0], [0, 0]], the certificate is Q * E_r * T
/// where E_r is the cols(a) x rows(a) matrix with I_r in its top-left corner.
/// The identity a*g*a == a is re-verified before returning.
[[nodiscard]] OneInverseCertificate one_inverse(const Matrix& a);

/// Wrap a caller-supplied candidate, verifying the defining identity
/// (InvalidOneInverse when it fails).
[[nodiscard]] OneInverseCertificate certify_one_inverse(const Matrix& a, const Matrix& g);

/// Every inner inverse of a, as the affine solution set of a * X * a == a in
/// a cols(a) x rows(a) unknown. Always consistent.
[[nodiscard]] AffineSolutionSet all_one_inverses(const Matrix& a);

/// The least k >= 0 with rank(a^k) == rank(a^{k+1}); a^0 is the identity.
/// Terminates at or below the matrix dimension. NotSquare on rectangular input.
[[nodiscard]] std::size_t index_of(const Matrix& a);

}  // namespace mateq
