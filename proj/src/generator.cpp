#include "mateq/generator.hpp"

namespace mateq {

void AffineGenerator::validate() const {
  if (y_rows == 0 || y_cols == 0) {
    throw Error(ErrorCode::ValidationError, "generator input must have positive dimensions");
  }
  for (const auto& term : terms) {
    if (term.sign != 1 && term.sign != -1) {
      throw Error(ErrorCode::ValidationError, "term sign must be +1 or -1");
    }
    if (term.left.field() != constant.field() || term.right.field() != constant.field()) {
      throw Error(ErrorCode::FieldMismatch, "term factor field differs from constant field");
    }
    if (term.left.cols() != y_rows || term.right.rows() != y_cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  "term cannot multiply a " + std::to_string(y_rows) + "x" +
                      std::to_string(y_cols) + " input");
    }
    if (term.left.rows() != constant.rows() || term.right.cols() != constant.cols()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "term output " + std::to_string(term.left.rows()) + "x" +
                      std::to_string(term.right.cols()) + " differs from constant " +
                      std::to_string(constant.rows()) + "x" + std::to_string(constant.cols()));
    }
  }
}

Matrix apply(const AffineGenerator& h, const Matrix& y) {
  h.validate();
  if (y.rows() != h.y_rows || y.cols() != h.y_cols) {
    throw Error(ErrorCode::ShapeMismatch,
                "generator expects a " + std::to_string(h.y_rows) + "x" +
                    std::to_string(h.y_cols) + " input, got " + std::to_string(y.rows()) + "x" +
                    std::to_string(y.cols()));
  }
  if (y.field() != h.constant.field()) {
    throw Error(ErrorCode::FieldMismatch, "generator input field differs from generator field");
  }
  Matrix out = h.constant;
  for (const auto& term : h.terms) {
    const Matrix value = term.left * y * term.right;
    out = term.sign == 1 ? out + value : out - value;
  }
  return out;
}

Matrix linear_matrix_of(const AffineGenerator& h) {
  h.validate();
  const std::size_t out_dim = h.constant.rows() * h.constant.cols();
  const std::size_t in_dim = h.y_rows * h.y_cols;
  Matrix m = Matrix::zeros(out_dim, in_dim, h.constant.field());
  for (const auto& term : h.terms) {
    const Matrix k = kron(term.right.transpose(), term.left);
    m = term.sign == 1 ? m + k : m - k;
  }
  return m;
}

ReproVerdict is_reproductive(const AffineGenerator& h) {
  h.validate();
  if (h.constant.rows() != h.y_rows || h.constant.cols() != h.y_cols) {
    throw Error(ErrorCode::NotComposable,
                "output shape " + std::to_string(h.constant.rows()) + "x" +
                    std::to_string(h.constant.cols()) + " differs from input shape " +
                    std::to_string(h.y_rows) + "x" + std::to_string(h.y_cols) +
                    "; the map cannot be composed with itself");
  }
  const Matrix m = linear_matrix_of(h);
  const Matrix m_vec_c = m * vec(h.constant);

  ReproVerdict verdict{false, false, false, unvec(m_vec_c, h.y_rows, h.y_cols)};
  verdict.linear_idempotent = m * m == m;
  verdict.constant_fixed = m_vec_c.is_zero();
  verdict.reproductive = verdict.linear_idempotent && verdict.constant_fixed;
  return verdict;
}

AffineSolutionSet image_of(const AffineGenerator& h) {
  h.validate();
  const Matrix m = linear_matrix_of(h);
  const RrefResult r = rref(m);

  AffineSolutionSet image;
  image.consistent = true;
  image.x_rows = h.constant.rows();
  image.x_cols = h.constant.cols();
  image.field = h.constant.field();
  image.particular = h.constant;
  for (std::size_t pivot_col : r.pivot_cols) {
    Matrix column(m.rows(), 1, h.constant.field());
    for (std::size_t i = 0; i < m.rows(); ++i) column.set(i, 0, m.at(i, pivot_col));
    image.basis.push_back(unvec(column, image.x_rows, image.x_cols));
  }
  return image;
}

}  // namespace mateq
