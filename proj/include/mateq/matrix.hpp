#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mateq/field.hpp"

namespace mateq {

/// Dense matrix over one field, row-major. All entries share the matrix's
/// FieldSpec; arithmetic never mixes fields (FieldMismatch) and checks shapes
/// (DimensionMismatch). Matrices are value types.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  [[nodiscard]] static Matrix zeros(std::size_t rows, std::size_t cols, const FieldSpec& field);
  [[nodiscard]] static Matrix identity(std::size_t n, const FieldSpec& field);

  /// Build from integer literals mapped into the field (handy for fixtures).
  [[nodiscard]] static Matrix from_ints(const FieldSpec& field,
                                        std::initializer_list<std::initializer_list<int>> rows);

  /// Build from a rectangular grid of scalars (ValidationError on ragged or
  /// empty input, FieldMismatch on mixed fields).
  [[nodiscard]] static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  [[nodiscard]] const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Scalar value);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix operator-() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  /// Entry-wise scaling.
  [[nodiscard]] Matrix scaled(const Scalar& factor) const;

  /// Equal iff same field, same shape, same entries.
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Deterministic total order (shape lexicographic, then entries row-major);
  /// both matrices must share a field. Used for canonical sorting of sets.
  [[nodiscard]] int compare(const Matrix& other) const;

  /// One-line display such as [[1, 0], [1/2, 3]].
  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * cols_ + j; }
  void require_same_field(const Matrix& other) const;

  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

/// a^exponent for square a; a^0 is the identity. Computed by repeated
/// multiplication. NotSquare on rectangular input.
[[nodiscard]] Matrix power(const Matrix& a, unsigned exponent);

/// Output of Gauss-Jordan elimination with deterministic pivoting (leftmost
/// candidate column, topmost nonzero row, no magnitude heuristics — exact
/// arithmetic needs no stabilization).
struct RrefResult {
  Matrix rref;                     ///< the reduced row echelon form
  std::size_t rank = 0;            ///< number of pivots
  Matrix transform;                ///< invertible T with T * input == rref
  std::vector<std::size_t> pivot_cols;  ///< pivot column per pivot row, ascending
};

[[nodiscard]] RrefResult rref(const Matrix& a);

[[nodiscard]] std::size_t rank(const Matrix& a);

/// Canonical nullspace basis read off the RREF: one column vector per free
/// column, ordered by free-column position; the free coordinate is 1.
/// Returns cols(a) x 1 column vectors; empty when the kernel is trivial.
[[nodiscard]] std::vector<Matrix> nullspace_basis(const Matrix& a);

/// Kronecker product (block (i,j) equals a(i,j) * b).
[[nodiscard]] Matrix kron(const Matrix& a, const Matrix& b);

/// Column-stacking vectorization: vec(A) lists A's columns top to bottom,
/// so vec(P*Y*Q) == kron(Q^T, P) * vec(Y). Returns a (rows*cols) x 1 vector.
[[nodiscard]] Matrix vec(const Matrix& a);

/// Inverse of vec: reshape a (rows*cols) x 1 column into rows x cols.
/// DimensionMismatch unless v is a column of exactly rows*cols entries.
[[nodiscard]] Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

}  // namespace mateq
