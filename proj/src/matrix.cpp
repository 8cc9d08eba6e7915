#include "mateq/matrix.hpp"

#include <utility>

namespace mateq {
namespace {

void require_nonempty(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::ValidationError, "matrix dimensions must be positive");
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field) {
  require_nonempty(rows, cols);
  data_.assign(rows_ * cols_, Scalar::zero(field_));
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols, const FieldSpec& field) {
  return Matrix(rows, cols, field);
}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n, field);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) m.data_[m.index(i, i)] = one;
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Scalar>> grid;
  grid.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    r.reserve(row.size());
    for (int v : row) r.push_back(Scalar::from_integer(v, field));
    grid.push_back(std::move(r));
  }
  return from_rows(grid);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::ValidationError, "matrix needs at least one row and one column");
  }
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw Error(ErrorCode::ValidationError, "ragged rows in matrix literal");
    }
  }
  Matrix m(rows.size(), cols, rows.front().front().field());
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != m.field_) {
        throw Error(ErrorCode::FieldMismatch, "mixed fields in matrix literal");
      }
      m.data_[m.index(i, j)] = rows[i][j];
    }
  }
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return data_[index(i, j)];
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (value.field() != field_) {
    throw Error(ErrorCode::FieldMismatch, "entry field differs from matrix field");
  }
  data_[index(i, j)] = std::move(value);
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& s = data_[index(i, j)];
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.data_[t.index(j, i)] = data_[index(i, j)];
  }
  return t;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.data_) s = -s;
  return r;
}

void Matrix::require_same_field(const Matrix& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::FieldMismatch,
                "matrices live in " + field_.name() + " and " + other.field_.name());
  }
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  a.require_same_field(b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "sum of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  a.require_same_field(b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "difference of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_same_field(b);
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix r(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.data_[a.index(i, k)];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.data_[b.index(k, j)];
        if (bkj.is_zero()) continue;
        r.data_[r.index(i, j)] += aik * bkj;
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  if (factor.field() != field_) {
    throw Error(ErrorCode::FieldMismatch, "scale factor field differs from matrix field");
  }
  Matrix r = *this;
  for (auto& s : r.data_) s *= factor;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.data_ == b.data_;
}

int Matrix::compare(const Matrix& other) const {
  require_same_field(other);
  if (rows_ != other.rows_) return rows_ < other.rows_ ? -1 : 1;
  if (cols_ != other.cols_) return cols_ < other.cols_ ? -1 : 1;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    const int c = data_[k].compare(other.data_[k]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) out += ", ";
      out += data_[index(i, j)].to_string();
    }
    out += "]";
  }
  out += "]";
  return out;
}

Matrix power(const Matrix& a, unsigned exponent) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NotSquare, "power of a " + std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()) + " matrix");
  }
  Matrix result = Matrix::identity(a.rows(), a.field());
  for (unsigned e = 0; e < exponent; ++e) result = result * a;
  return result;
}

RrefResult rref(const Matrix& a) {
  RrefResult out{a, 0, Matrix::identity(a.rows(), a.field()), {}};
  Matrix& r = out.rref;
  Matrix& t = out.transform;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot_row = 0;

  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t i = pivot_row; i < rows; ++i) {
      if (!r.at(i, col).is_zero()) {
        found = i;
        break;
      }
    }
    if (found == rows) continue;

    if (found != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) {
        Scalar tmp = r.at(found, j);
        r.set(found, j, r.at(pivot_row, j));
        r.set(pivot_row, j, std::move(tmp));
      }
      for (std::size_t j = 0; j < rows; ++j) {
        Scalar tmp = t.at(found, j);
        t.set(found, j, t.at(pivot_row, j));
        t.set(pivot_row, j, std::move(tmp));
      }
    }

    const Scalar scale = r.at(pivot_row, col).inverse();
    if (!scale.is_one()) {
      for (std::size_t j = 0; j < cols; ++j) r.set(pivot_row, j, r.at(pivot_row, j) * scale);
      for (std::size_t j = 0; j < rows; ++j) t.set(pivot_row, j, t.at(pivot_row, j) * scale);
    }

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      const Scalar factor = r.at(i, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        r.set(i, j, r.at(i, j) - factor * r.at(pivot_row, j));
      }
      for (std::size_t j = 0; j < rows; ++j) {
        t.set(i, j, t.at(i, j) - factor * t.at(pivot_row, j));
      }
    }

    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

std::vector<Matrix> nullspace_basis(const Matrix& a) {
  const RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<Matrix> basis;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Matrix v(a.cols(), 1, a.field());
    v.set(free_col, 0, Scalar::one(a.field()));
    for (std::size_t s = 0; s < r.pivot_cols.size(); ++s) {
      v.set(r.pivot_cols[s], 0, -r.rref.at(s, free_col));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::FieldMismatch, "Kronecker product across fields");
  }
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Scalar& f = a.at(ia, ja);
      if (f.is_zero()) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          const Scalar& g = b.at(ib, jb);
          if (g.is_zero()) continue;
          r.set(ia * b.rows() + ib, ja * b.cols() + jb, f * g);
        }
      }
    }
  }
  return r;
}

Matrix vec(const Matrix& a) {
  Matrix v(a.rows() * a.cols(), 1, a.field());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      v.set(j * a.rows() + i, 0, a.at(i, j));
    }
  }
  return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch,
                "unvec expects a " + std::to_string(rows * cols) + "x1 column, got " +
                    std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
  }
  Matrix m(rows, cols, v.field());
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      m.set(i, j, v.at(j * rows + i, 0));
    }
  }
  return m;
}

}  // namespace mateq
