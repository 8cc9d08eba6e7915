#include "mateq/penrose.hpp"

namespace mateq {
namespace {

void validate_problem(const PenroseProblem& problem) {
  if (!problem.a.is_square()) {
    throw Error(ErrorCode::NotSquare, "left coefficient must be square");
  }
  if (!problem.d.is_square()) {
    throw Error(ErrorCode::NotSquare, "right coefficient must be square");
  }
  const FieldSpec& field = problem.a.field();
  if (problem.b.field() != field || problem.d.field() != field || problem.e.field() != field) {
    throw Error(ErrorCode::FieldMismatch, "all four matrices must share one field");
  }
  const std::size_t p = problem.a.rows();
  const std::size_t q = problem.d.rows();
  if (problem.b.rows() != p || problem.b.cols() != q) {
    throw Error(ErrorCode::DimensionMismatch,
                "left rhs must be " + std::to_string(p) + "x" + std::to_string(q) + ", got " +
                    std::to_string(problem.b.rows()) + "x" + std::to_string(problem.b.cols()));
  }
  if (problem.e.rows() != p || problem.e.cols() != q) {
    throw Error(ErrorCode::DimensionMismatch,
                "right rhs must be " + std::to_string(p) + "x" + std::to_string(q) + ", got " +
                    std::to_string(problem.e.rows()) + "x" + std::to_string(problem.e.cols()));
  }
  if (problem.m < 1 || problem.n < 1) {
    throw Error(ErrorCode::ValidationError, "exponents must be at least 1");
  }
}

bool clauses_hold(const PenroseContext& context, const PenroseProblem& problem) {
  return context.am * context.g_am.g * problem.b == problem.b &&
         problem.e * context.g_dn.g * context.dn == problem.e &&
         context.am * problem.e == problem.b * context.dn;
}

}  // namespace

PenroseContext penrose_context(const PenroseProblem& problem,
                               const std::optional<Matrix>& g_am_user,
                               const std::optional<Matrix>& g_dn_user, bool allow_small_power) {
  validate_problem(problem);

  const std::size_t index_a = index_of(problem.a);
  const std::size_t index_d = index_of(problem.d);
  const bool validated = problem.m >= index_a && problem.n >= index_d;
  if (!validated && !allow_small_power) {
    throw Error(ErrorCode::IndexTooSmall,
                "exponents (" + std::to_string(problem.m) + ", " + std::to_string(problem.n) +
                    ") below the coefficient indices (" + std::to_string(index_a) + ", " +
                    std::to_string(index_d) + "); pass the small-power override to proceed");
  }

  const Matrix am = power(problem.a, problem.m);
  const Matrix dn = power(problem.d, problem.n);
  OneInverseCertificate g_am =
      g_am_user ? certify_one_inverse(am, *g_am_user) : one_inverse(am);
  OneInverseCertificate g_dn =
      g_dn_user ? certify_one_inverse(dn, *g_dn_user) : one_inverse(dn);

  PenroseContext context{am,      dn,        std::move(g_am), std::move(g_dn),
                         index_a, index_d,   validated,       std::nullopt,
                         std::nullopt};

  if (clauses_hold(context, problem)) {
    const Matrix x1 = context.g_am.g * problem.b + problem.e * context.g_dn.g -
                      context.g_am.g * context.am * problem.e * context.g_dn.g;
    if (context.am * x1 != problem.b || x1 * context.dn != problem.e) {
      throw Error(ErrorCode::X1Unverified,
                  "internal defect: canonical common solution failed verification");
    }
    context.x1 = x1;
    context.x1_literal = context.g_am.g * problem.b + problem.e * context.g_dn.g -
                         context.g_am.g * context.am * problem.a * problem.e * context.g_dn.g;
  }
  return context;
}

ConsistencyReport penrose_consistent(const PenroseContext& context,
                                     const PenroseProblem& problem) {
  const Matrix left_residual = context.am * context.g_am.g * problem.b - problem.b;
  const Matrix right_residual = problem.e * context.g_dn.g * context.dn - problem.e;
  const Matrix coupling_residual = context.am * problem.e - problem.b * context.dn;

  ConsistencyReport report;
  report.witnesses.emplace_back("G_AM", context.g_am.g);
  report.witnesses.emplace_back("G_DN", context.g_dn.g);
  if (!left_residual.is_zero()) report.failed_clauses.push_back("left-solvable");
  if (!right_residual.is_zero()) report.failed_clauses.push_back("right-solvable");
  if (!coupling_residual.is_zero()) report.failed_clauses.push_back("coupling");
  report.consistent = report.failed_clauses.empty();

  if (report.consistent) {
    report.particular = context.x1;
    if (context.x1 && context.x1_literal && *context.x1 != *context.x1_literal) {
      report.notes.push_back(
          "alternative reading of the canonical solution (extra left coefficient in the "
          "correction term) differs here; using the form verified against both equations");
    }
  } else if (!left_residual.is_zero()) {
    report.defect = left_residual;
  } else if (!right_residual.is_zero()) {
    report.defect = right_residual;
  } else {
    report.defect = coupling_residual;
  }
  if (!context.power_validated) {
    report.notes.push_back("power validation bypassed: an exponent is below the matrix index");
  }
  return report;
}

Matrix penrose_x1(const PenroseContext& context) {
  if (!context.x1) {
    throw Error(ErrorCode::Inconsistent, "the pair has no common solution");
  }
  return *context.x1;
}

AffineGenerator penrose_f_generator(const PenroseContext& context,
                                    const PenroseProblem& problem) {
  const Matrix x1 = penrose_x1(context);
  const FieldSpec& field = problem.a.field();
  const Matrix left = Matrix::identity(problem.a.rows(), field) - context.g_am.g * context.am;
  const Matrix right = Matrix::identity(problem.d.rows(), field) - context.dn * context.g_dn.g;
  AffineGenerator f{x1, {LinearTerm{left, right, 1}}, problem.a.rows(), problem.d.rows()};
  f.validate();
  return f;
}

AffineGenerator penrose_g_generator(const PenroseContext& context, const PenroseProblem& problem,
                                    const Matrix& x0) {
  AffineGenerator g = penrose_f_generator(context, problem);
  if (x0.rows() != problem.a.rows() || x0.cols() != problem.d.rows() ||
      x0.field() != problem.a.field()) {
    throw Error(ErrorCode::ShapeMismatch, "anchor has the wrong shape or field");
  }
  if (context.am * x0 != problem.b || x0 * context.dn != problem.e) {
    throw Error(ErrorCode::NotASolution, "anchor does not solve both equations");
  }
  g.constant = x0;
  return g;
}

LinearMatrixSystem penrose_system(const PenroseProblem& problem) {
  validate_problem(problem);
  const FieldSpec& field = problem.a.field();
  const std::size_t p = problem.a.rows();
  const std::size_t q = problem.d.rows();

  LinearMatrixSystem system;
  system.x_rows = p;
  system.x_cols = q;
  system.field = field;
  system.constraints.push_back(LinearConstraint{
      {LinearTerm{power(problem.a, problem.m), Matrix::identity(q, field), 1}}, problem.b});
  system.constraints.push_back(LinearConstraint{
      {LinearTerm{Matrix::identity(p, field), power(problem.d, problem.n), 1}}, problem.e});
  return system;
}

}  // namespace mateq
