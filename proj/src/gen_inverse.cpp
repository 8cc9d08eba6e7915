#include "mateq/gen_inverse.hpp"

namespace mateq {

bool is_one_inverse(const Matrix& a, const Matrix& g) {
  if (g.rows() != a.cols() || g.cols() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "candidate inner inverse must be " + std::to_string(a.cols()) + "x" +
                    std::to_string(a.rows()) + ", got " + std::to_string(g.rows()) + "x" +
                    std::to_string(g.cols()));
  }
  return a * g * a == a;
}

OneInverseCertificate one_inverse(const Matrix& a) {
  const RrefResult r = rref(a);

  // Column operations on the RREF: pivot column j_s maps to basis column s,
  // free column f maps to e_f minus its pivot-row entries, so R * Q is
  // [[I_r, 0], [0, 0]].
  Matrix q(a.cols(), a.cols(), a.field());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  for (std::size_t s = 0; s < r.pivot_cols.size(); ++s) {
    q.set(r.pivot_cols[s], s, Scalar::one(a.field()));
  }
  std::size_t out_col = r.pivot_cols.size();
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    q.set(f, out_col, Scalar::one(a.field()));
    for (std::size_t s = 0; s < r.pivot_cols.size(); ++s) {
      q.set(r.pivot_cols[s], out_col, -r.rref.at(s, f));
    }
    ++out_col;
  }

  Matrix e(a.cols(), a.rows(), a.field());
  for (std::size_t s = 0; s < r.rank; ++s) e.set(s, s, Scalar::one(a.field()));

  OneInverseCertificate cert{q * e * r.transform, r.rank, "rank-normal-form"};
  if (!is_one_inverse(a, cert.g)) {
    throw Error(ErrorCode::InvalidOneInverse,
                "internal defect: constructed inner inverse failed verification");
  }
  return cert;
}

OneInverseCertificate certify_one_inverse(const Matrix& a, const Matrix& g) {
  if (!is_one_inverse(a, g)) {
    throw Error(ErrorCode::InvalidOneInverse,
                "supplied matrix fails the defining identity a*g*a == a");
  }
  return OneInverseCertificate{g, rank(a), "user-supplied"};
}

AffineSolutionSet all_one_inverses(const Matrix& a) {
  LinearMatrixSystem system;
  system.x_rows = a.cols();
  system.x_cols = a.rows();
  system.field = a.field();
  system.constraints.push_back(LinearConstraint{{LinearTerm{a, a, 1}}, a});
  return solve_linear_system(system);
}

std::size_t index_of(const Matrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NotSquare, "matrix index requires a square matrix");
  }
  std::size_t previous_rank = a.rows();  // rank of a^0 = I
  Matrix current = a;
  std::size_t k = 0;
  while (true) {
    const std::size_t current_rank = rank(current);
    if (current_rank == previous_rank) return k;
    ++k;
    previous_rank = current_rank;
    current = current * a;
  }
}

}  // namespace mateq
