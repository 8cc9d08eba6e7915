#pragma once

#include <optional>

#include "mateq/consistency.hpp"
#include "mateq/gen_inverse.hpp"
#include "mateq/generator.hpp"

namespace mateq {

/// The two-sided power equation a^m * X * b^n = c in an unknown X, with
/// a square (p x p), b square (q x q), c of shape p x q, and m, n >= 1.
struct ClineProblem {
  Matrix a;
  Matrix b;
  Matrix c;
  unsigned m = 1;
  unsigned n = 1;
};

/// Precomputed data the closed forms are built from: the powers, one verified
/// inner inverse of each power, and the index bookkeeping.
struct ClineContext {
  Matrix am;  ///< a^m
  Matrix bn;  ///< b^n
  OneInverseCertificate g_am;
  OneInverseCertificate g_bn;
  std::size_t index_a = 0;
  std::size_t index_b = 0;
  bool power_validated = false;  ///< m >= index_a and n >= index_b
};

/// Validate the problem and build the context. User-supplied inner inverses
/// (for a^m / b^n respectively) are verified (InvalidOneInverse); otherwise the
/// canonical rank-normal-form inverses are constructed. By default m below the
/// index of a (or n below the index of b) is rejected with IndexTooSmall;
/// allow_small_power bypasses that check (recorded in the context flag).
[[nodiscard]] ClineContext cline_context(const ClineProblem& problem,
                                         const std::optional<Matrix>& g_am_user = std::nullopt,
                                         const std::optional<Matrix>& g_bn_user = std::nullopt,
                                         bool allow_small_power = false);

/// Exact consistency decision: the equation is solvable iff
/// a^m * G_am * c * G_bn * b^n == c for the context's inner inverses (the
/// verdict does not depend on which inner inverses were chosen). When
/// consistent the report carries the particular solution G_am * c * G_bn;
/// when inconsistent it carries the nonzero residual as the defect.
[[nodiscard]] ConsistencyReport cline_consistent(const ClineContext& context,
                                                 const ClineProblem& problem);

/// The closed-form general solution as an affine generator
///   f(Y) = G_am*c*G_bn + Y - G_am*a^m * Y * b^n*G_bn,
/// whose image over all p x q inputs Y is exactly the solution set.
/// Requires consistency (Inconsistent).
[[nodiscard]] AffineGenerator cline_f_generator(const ClineContext& context,
                                                const ClineProblem& problem);

/// The variant anchored at a caller-chosen solution x0:
///   g(Y) = x0 + Y - G_am*a^m * Y * b^n*G_bn.
/// Requires consistency and that x0 actually solves the equation
/// (NotASolution). g is reproductive iff x0 == G_am*c*G_bn.
[[nodiscard]] AffineGenerator cline_g_generator(const ClineContext& context,
                                                const ClineProblem& problem, const Matrix& x0);

/// The same equation as a vectorized linear system (the independent oracle
/// route; powers are computed here, no inner inverses involved).
[[nodiscard]] LinearMatrixSystem cline_system(const ClineProblem& problem);

}  // namespace mateq
