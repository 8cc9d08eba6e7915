#include "mateq/linear_system.hpp"

#include <string>

namespace mateq {
namespace {

std::string shape_of(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

/// Columns of `columns` glued into one matrix (all n x 1 over one field).
Matrix glue_columns(const std::vector<Matrix>& columns) {
  Matrix out(columns.front().rows(), columns.size(), columns.front().field());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < out.rows(); ++i) out.set(i, j, columns[j].at(i, 0));
  }
  return out;
}

void require_matching_shape(const AffineSolutionSet& set, std::size_t rows, std::size_t cols,
                            const FieldSpec& field) {
  if (set.x_rows != rows || set.x_cols != cols) {
    throw Error(ErrorCode::ShapeMismatch,
                "solution set over " + std::to_string(set.x_rows) + "x" +
                    std::to_string(set.x_cols) + " unknowns vs " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
  if (set.field != field) {
    throw Error(ErrorCode::FieldMismatch,
                "solution set over " + set.field.name() + " vs " + field.name());
  }
}

}  // namespace

void LinearMatrixSystem::validate() const {
  if (x_rows == 0 || x_cols == 0) {
    throw Error(ErrorCode::ValidationError, "unknown must have positive dimensions");
  }
  if (constraints.empty()) {
    throw Error(ErrorCode::ValidationError, "system needs at least one constraint");
  }
  for (const auto& constraint : constraints) {
    if (constraint.terms.empty()) {
      throw Error(ErrorCode::ValidationError, "constraint needs at least one term");
    }
    if (constraint.rhs.field() != field) {
      throw Error(ErrorCode::FieldMismatch, "constraint rhs field differs from system field");
    }
    for (const auto& term : constraint.terms) {
      if (term.sign != 1 && term.sign != -1) {
        throw Error(ErrorCode::ValidationError, "term sign must be +1 or -1");
      }
      if (term.left.field() != field || term.right.field() != field) {
        throw Error(ErrorCode::FieldMismatch, "term factor field differs from system field");
      }
      if (term.left.cols() != x_rows) {
        throw Error(ErrorCode::DimensionMismatch,
                    "left factor " + shape_of(term.left) + " cannot multiply a " +
                        std::to_string(x_rows) + "x" + std::to_string(x_cols) + " unknown");
      }
      if (term.right.rows() != x_cols) {
        throw Error(ErrorCode::DimensionMismatch,
                    "right factor " + shape_of(term.right) + " cannot be multiplied by a " +
                        std::to_string(x_rows) + "x" + std::to_string(x_cols) + " unknown");
      }
      if (term.left.rows() != constraint.rhs.rows() ||
          term.right.cols() != constraint.rhs.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "term yields " + std::to_string(term.left.rows()) + "x" +
                        std::to_string(term.right.cols()) + " but rhs is " +
                        shape_of(constraint.rhs));
      }
    }
  }
}

Matrix system_matrix(const LinearMatrixSystem& system) {
  system.validate();
  const std::size_t n = system.x_rows * system.x_cols;
  std::size_t total_rows = 0;
  for (const auto& c : system.constraints) total_rows += c.rhs.rows() * c.rhs.cols();

  Matrix m(total_rows, n, system.field);
  std::size_t row_base = 0;
  for (const auto& constraint : system.constraints) {
    const std::size_t block_rows = constraint.rhs.rows() * constraint.rhs.cols();
    Matrix block = Matrix::zeros(block_rows, n, system.field);
    for (const auto& term : constraint.terms) {
      Matrix k = kron(term.right.transpose(), term.left);
      block = term.sign == 1 ? block + k : block - k;
    }
    for (std::size_t i = 0; i < block_rows; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.set(row_base + i, j, block.at(i, j));
    }
    row_base += block_rows;
  }
  return m;
}

Matrix stacked_rhs(const LinearMatrixSystem& system) {
  system.validate();
  std::size_t total_rows = 0;
  for (const auto& c : system.constraints) total_rows += c.rhs.rows() * c.rhs.cols();

  Matrix b(total_rows, 1, system.field);
  std::size_t row_base = 0;
  for (const auto& constraint : system.constraints) {
    const Matrix v = vec(constraint.rhs);
    for (std::size_t i = 0; i < v.rows(); ++i) b.set(row_base + i, 0, v.at(i, 0));
    row_base += v.rows();
  }
  return b;
}

AffineSolutionSet solve_linear_system(const LinearMatrixSystem& system) {
  const Matrix m = system_matrix(system);
  const Matrix b = stacked_rhs(system);
  const std::size_t n = m.cols();

  // One RREF of the augmented matrix [M | b]. Elimination scans columns left
  // to right, so the first n columns reduce exactly as RREF(M) would.
  Matrix augmented(m.rows(), n + 1, system.field);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented.set(i, j, m.at(i, j));
    augmented.set(i, n, b.at(i, 0));
  }
  const RrefResult r = rref(augmented);

  AffineSolutionSet set;
  set.x_rows = system.x_rows;
  set.x_cols = system.x_cols;
  set.field = system.field;
  set.consistent = r.pivot_cols.empty() || r.pivot_cols.back() != n;
  if (!set.consistent) return set;

  Matrix particular(n, 1, system.field);
  for (std::size_t s = 0; s < r.pivot_cols.size(); ++s) {
    particular.set(r.pivot_cols[s], 0, r.rref.at(s, n));
  }
  set.particular = unvec(particular, system.x_rows, system.x_cols);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Matrix v(n, 1, system.field);
    v.set(free_col, 0, Scalar::one(system.field));
    for (std::size_t s = 0; s < r.pivot_cols.size(); ++s) {
      v.set(r.pivot_cols[s], 0, -r.rref.at(s, free_col));
    }
    set.basis.push_back(unvec(v, system.x_rows, system.x_cols));
  }
  return set;
}

bool contains(const AffineSolutionSet& set, const Matrix& x) {
  require_matching_shape(set, x.rows(), x.cols(), x.field());
  if (!set.consistent) return false;

  const Matrix delta = vec(x) - vec(*set.particular);
  if (set.basis.empty()) return delta.is_zero();

  std::vector<Matrix> columns;
  columns.reserve(set.basis.size() + 1);
  for (const auto& v : set.basis) columns.push_back(vec(v));
  const Matrix span = glue_columns(columns);
  columns.push_back(delta);
  const Matrix span_plus = glue_columns(columns);
  return rank(span) == rank(span_plus);
}

void for_each_solution(const AffineSolutionSet& set, std::size_t cap,
                       const std::function<void(const Matrix&)>& visit) {
  if (!set.consistent) return;
  if (set.basis.empty()) {
    visit(*set.particular);
    return;
  }
  if (!set.field.is_prime_field()) {
    throw Error(ErrorCode::NotEnumerable,
                "a positive-dimensional rational solution set is infinite");
  }
  const std::size_t d = set.basis.size();
  BigInt count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    count *= set.field.p;
    if (count > cap) {
      throw Error(ErrorCode::CapExceeded, "enumeration of " + count.str() +
                                              "+ solutions exceeds cap " + std::to_string(cap));
    }
  }

  std::vector<std::int64_t> coefficient(d, 0);
  while (true) {
    Matrix x = *set.particular;
    for (std::size_t i = 0; i < d; ++i) {
      if (coefficient[i] == 0) continue;
      x = x + set.basis[i].scaled(Scalar::from_integer(coefficient[i], set.field));
    }
    visit(x);

    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++coefficient[pos] < set.field.p) break;
      coefficient[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::vector<Matrix> enumerate_solutions(const AffineSolutionSet& set, std::size_t cap) {
  std::vector<Matrix> out;
  for_each_solution(set, cap, [&](const Matrix& x) { out.push_back(x); });
  return out;
}

bool sets_equal(const AffineSolutionSet& a, const AffineSolutionSet& b) {
  if (a.x_rows != b.x_rows || a.x_cols != b.x_cols) {
    throw Error(ErrorCode::ShapeMismatch,
                "comparing solution sets over different unknown shapes");
  }
  if (a.field != b.field) {
    throw Error(ErrorCode::FieldMismatch, "comparing solution sets over different fields");
  }
  if (a.consistent != b.consistent) return false;
  if (!a.consistent) return true;

  if (!contains(a, *b.particular) || !contains(b, *a.particular)) return false;

  if (a.basis.empty() && b.basis.empty()) return true;
  std::vector<Matrix> cols_a, cols_b, cols_ab;
  for (const auto& v : a.basis) cols_a.push_back(vec(v));
  for (const auto& v : b.basis) cols_b.push_back(vec(v));
  cols_ab = cols_a;
  cols_ab.insert(cols_ab.end(), cols_b.begin(), cols_b.end());

  const std::size_t rank_a = cols_a.empty() ? 0 : rank(glue_columns(cols_a));
  const std::size_t rank_b = cols_b.empty() ? 0 : rank(glue_columns(cols_b));
  const std::size_t rank_ab = rank(glue_columns(cols_ab));
  return rank_a == rank_b && rank_b == rank_ab;
}

}  // namespace mateq
