#pragma once

#include <optional>

#include "mateq/consistency.hpp"
#include "mateq/gen_inverse.hpp"
#include "mateq/generator.hpp"

namespace mateq {

/// The simultaneous pair a^m * X = b and X * d^n = e in one unknown X of
/// shape p x q, with a square (p x p), d square (q x q), b and e both p x q,
/// and m, n >= 1.
struct PenroseProblem {
  Matrix a;
  Matrix b;
  Matrix d;
  Matrix e;
  unsigned m = 1;
  unsigned n = 1;
};

/// Precomputed powers, verified inner inverses, index bookkeeping, and — when
/// the pair is consistent — the canonical common solution
///   x1 = G_am*b + e*G_dn - G_am*a^m*e*G_dn,
/// verified against both equations at construction. The alternative reading
/// with an extra left coefficient in the correction term,
///   G_am*a^m*a*e*G_dn, is also evaluated; reports flag when the two differ.
struct PenroseContext {
  Matrix am;  ///< a^m
  Matrix dn;  ///< d^n
  OneInverseCertificate g_am;
  OneInverseCertificate g_dn;
  std::size_t index_a = 0;
  std::size_t index_d = 0;
  bool power_validated = false;  ///< m >= index_a and n >= index_d
  std::optional<Matrix> x1;         ///< present iff consistent
  std::optional<Matrix> x1_literal; ///< alternative reading, present iff consistent
};

/// Validate the problem and build the context (same inner-inverse and
/// small-power conventions as the two-sided family).
[[nodiscard]] PenroseContext penrose_context(const PenroseProblem& problem,
                                             const std::optional<Matrix>& g_am_user = std::nullopt,
                                             const std::optional<Matrix>& g_dn_user = std::nullopt,
                                             bool allow_small_power = false);

/// Exact consistency decision via three clauses, each independently checkable:
///   left-solvable:  a^m * G_am * b == b
///   right-solvable: e * G_dn * d^n == e
///   coupling:       a^m * e == b * d^n
/// The pair is consistent iff all three hold; failed clauses are named in the
/// report, and the first failing clause's residual is the defect.
[[nodiscard]] ConsistencyReport penrose_consistent(const PenroseContext& context,
                                                   const PenroseProblem& problem);

/// The canonical common solution x1 (Inconsistent when the pair is not
/// consistent).
[[nodiscard]] Matrix penrose_x1(const PenroseContext& context);

/// The closed-form general solution of the pair:
///   f(Y) = x1 + (I - G_am*a^m) * Y * (I - d^n*G_dn).
/// Requires consistency (Inconsistent).
[[nodiscard]] AffineGenerator penrose_f_generator(const PenroseContext& context,
                                                  const PenroseProblem& problem);

/// The variant anchored at a caller-chosen common solution x0 (NotASolution
/// unless x0 solves both equations). g is reproductive iff x0 == x1.
[[nodiscard]] AffineGenerator penrose_g_generator(const PenroseContext& context,
                                                  const PenroseProblem& problem, const Matrix& x0);

/// The pair as one vectorized linear system (the independent oracle route).
[[nodiscard]] LinearMatrixSystem penrose_system(const PenroseProblem& problem);

}  // namespace mateq
