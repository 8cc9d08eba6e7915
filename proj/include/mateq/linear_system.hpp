#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mateq/matrix.hpp"

namespace mateq {

/// One summand sign * left * X * right of a matrix-linear expression in X.
struct LinearTerm {
  Matrix left;
  Matrix right;
  int sign = 1;  ///< +1 or -1
};

/// One equation: sum of terms equals rhs.
struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Matrix rhs;
};

/// A simultaneous system of matrix-linear equations in one unknown X of shape
/// x_rows x x_cols over one field. Solved exactly by vectorization:
/// vec(P*X*Q) = kron(Q^T, P) * vec(X) with column-stacking vec.
struct LinearMatrixSystem {
  std::size_t x_rows = 0;
  std::size_t x_cols = 0;
  FieldSpec field;
  std::vector<LinearConstraint> constraints;

  /// Dimensional/field coherence of every term and rhs (DimensionMismatch,
  /// FieldMismatch, ValidationError on empty or malformed input).
  void validate() const;
};

/// The affine set {particular + span(basis)} of all solutions, or the verdict
/// that none exist. Basis matrices are linearly independent by construction.
struct AffineSolutionSet {
  bool consistent = false;
  std::size_t x_rows = 0;
  std::size_t x_cols = 0;
  FieldSpec field;
  std::optional<Matrix> particular;  ///< present iff consistent
  std::vector<Matrix> basis;         ///< x_rows x x_cols homogeneous generators

  [[nodiscard]] std::size_t dimension() const noexcept { return basis.size(); }
};

/// Stacked coefficient matrix of the vectorized system, constraints in order:
/// each block is sum of sign * kron(right^T, left).
[[nodiscard]] Matrix system_matrix(const LinearMatrixSystem& system);

/// Stacked vec(rhs) column, constraints in order.
[[nodiscard]] Matrix stacked_rhs(const LinearMatrixSystem& system);

/// Exact general solution via one deterministic RREF of the augmented system.
/// The particular solution sets every free coordinate to zero; the basis is
/// the canonical RREF nullspace basis, unvectorized.
[[nodiscard]] AffineSolutionSet solve_linear_system(const LinearMatrixSystem& system);

/// Exact membership test (ShapeMismatch/FieldMismatch if x does not match the
/// set's unknown shape). An inconsistent set contains nothing.
[[nodiscard]] bool contains(const AffineSolutionSet& set, const Matrix& x);

/// Visit every solution in deterministic order (coefficient tuples over GF(p)
/// in lexicographic order, last coordinate fastest). Requirements: an
/// inconsistent set visits nothing; dimension 0 visits the particular solution
/// once (any field); positive dimension requires a prime field (NotEnumerable)
/// and p^dimension <= cap (CapExceeded).
void for_each_solution(const AffineSolutionSet& set, std::size_t cap,
                       const std::function<void(const Matrix&)>& visit);

/// Materialized form of for_each_solution.
[[nodiscard]] std::vector<Matrix> enumerate_solutions(const AffineSolutionSet& set,
                                                      std::size_t cap = 1'000'000);

/// Extensional equality of two solution sets over the same unknown shape
/// (ShapeMismatch otherwise): both inconsistent, or mutual membership of
/// particulars plus equal homogeneous spans.
[[nodiscard]] bool sets_equal(const AffineSolutionSet& a, const AffineSolutionSet& b);

}  // namespace mateq
