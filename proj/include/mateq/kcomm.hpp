#pragma once

#include <optional>

#include "mateq/consistency.hpp"
#include "mateq/gen_inverse.hpp"
#include "mateq/generator.hpp"

namespace mateq {

/// The pair of conditions on one unknown X (square, same size as a):
///   a * X * a == a            (inner inverse)
///   a^k * X == X * a^k        (commutes with the k-th power)
/// with a square and k >= 1. Nonsingular a is allowed (X is then the ordinary
/// inverse); for singular a the pair may or may not be consistent.
struct KCommProblem {
  Matrix a;
  unsigned k = 1;
};

/// Canonical data for a consistent pair: abar is the oracle's canonical
/// particular solution (deterministic), xhat = abar * a * abar also solves the
/// pair (verified at construction) and anchors the reproductive closed form.
struct KCommContext {
  Matrix ak;     ///< a^k
  Matrix abar;   ///< canonical solution of the pair
  Matrix abark;  ///< abar^k
  Matrix xhat;   ///< abar * a * abar
  std::size_t index_a = 0;   ///< index of a (diagnostic; k need not reach it)
  bool nonsingular = false;  ///< rank(a) == size
};

/// Decide the pair and build the canonical context, or nullopt when the pair
/// has no solution. A user-supplied abar is verified against both conditions
/// (InvalidOneInverse) and then used instead of the oracle's choice.
[[nodiscard]] std::optional<KCommContext> find_kcomm_inverse(
    const KCommProblem& problem, const std::optional<Matrix>& abar_user = std::nullopt);

/// Consistency decision as a report (witness abar and particular xhat when
/// consistent; notes record the singular/nonsingular status).
[[nodiscard]] ConsistencyReport kcomm_consistent(const KCommProblem& problem,
                                                 const std::optional<Matrix>& abar_user =
                                                     std::nullopt);

/// The closed-form general solution of the pair:
///   f(Y) = xhat + Y - (I - abar*a) * Y * (a^k * abar^k)
///               - (abar^k * a^k) * Y * (I - a*abar)
///               - (abar*a) * Y * (a*abar).
[[nodiscard]] AffineGenerator kcomm_f_generator(const KCommContext& context,
                                                const KCommProblem& problem);

/// The variant anchored at a caller-chosen solution x0 (NotASolution unless x0
/// satisfies both conditions). g is reproductive iff x0 == xhat.
[[nodiscard]] AffineGenerator kcomm_g_generator(const KCommContext& context,
                                                const KCommProblem& problem, const Matrix& x0);

/// The pair as one vectorized linear system (the independent oracle route).
[[nodiscard]] LinearMatrixSystem kcomm_system(const KCommProblem& problem);

/// Structural identities the canonical context satisfies, each with its
/// residual so failures are diagnosable; x0-dependent items are included when
/// an anchor solution is supplied.
struct KCommIdentityReport {
  struct Item {
    std::string name;
    bool holds = false;
    Matrix defect;
  };
  std::vector<Item> items;
  bool all_hold = true;
};

/// Items checked:
///   powers-commute:      a^k * abar^k == abar^k * a^k
///   power-bridge:        a^k * abar^k * a^k == a^k
///   anchor-left-shadow:  x0 * a^k * abar^k == a^k * abar^(k+1)   (with x0)
///   anchor-right-shadow: abar^k * a^k * x0 == a^k * abar^(k+1)   (with x0)
///   anchor-fixed-point:  f(x0) == x0                             (with x0)
[[nodiscard]] KCommIdentityReport kcomm_identity_report(
    const KCommContext& context, const KCommProblem& problem,
    const std::optional<Matrix>& x0 = std::nullopt);

}  // namespace mateq
