#include "mateq/cline.hpp"

namespace mateq {
namespace {

void validate_problem(const ClineProblem& problem) {
  if (!problem.a.is_square()) {
    throw Error(ErrorCode::NotSquare, "left coefficient must be square");
  }
  if (!problem.b.is_square()) {
    throw Error(ErrorCode::NotSquare, "right coefficient must be square");
  }
  if (problem.a.field() != problem.b.field() || problem.a.field() != problem.c.field()) {
    throw Error(ErrorCode::FieldMismatch, "all three matrices must share one field");
  }
  if (problem.c.rows() != problem.a.rows() || problem.c.cols() != problem.b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "rhs must be " + std::to_string(problem.a.rows()) + "x" +
                    std::to_string(problem.b.rows()) + ", got " +
                    std::to_string(problem.c.rows()) + "x" + std::to_string(problem.c.cols()));
  }
  if (problem.m < 1 || problem.n < 1) {
    throw Error(ErrorCode::ValidationError, "exponents must be at least 1");
  }
}

}  // namespace

ClineContext cline_context(const ClineProblem& problem, const std::optional<Matrix>& g_am_user,
                           const std::optional<Matrix>& g_bn_user, bool allow_small_power) {
  validate_problem(problem);

  const std::size_t index_a = index_of(problem.a);
  const std::size_t index_b = index_of(problem.b);
  const bool validated = problem.m >= index_a && problem.n >= index_b;
  if (!validated && !allow_small_power) {
    throw Error(ErrorCode::IndexTooSmall,
                "exponents (" + std::to_string(problem.m) + ", " + std::to_string(problem.n) +
                    ") below the coefficient indices (" + std::to_string(index_a) + ", " +
                    std::to_string(index_b) + "); pass the small-power override to proceed");
  }

  const Matrix am = power(problem.a, problem.m);
  const Matrix bn = power(problem.b, problem.n);
  OneInverseCertificate g_am =
      g_am_user ? certify_one_inverse(am, *g_am_user) : one_inverse(am);
  OneInverseCertificate g_bn =
      g_bn_user ? certify_one_inverse(bn, *g_bn_user) : one_inverse(bn);

  return ClineContext{am, bn, std::move(g_am), std::move(g_bn), index_a, index_b, validated};
}

ConsistencyReport cline_consistent(const ClineContext& context, const ClineProblem& problem) {
  const Matrix candidate = context.g_am.g * problem.c * context.g_bn.g;
  const Matrix residual = context.am * candidate * context.bn - problem.c;

  ConsistencyReport report;
  report.consistent = residual.is_zero();
  report.witnesses.emplace_back("G_AM", context.g_am.g);
  report.witnesses.emplace_back("G_BN", context.g_bn.g);
  if (report.consistent) {
    report.particular = candidate;
  } else {
    report.defect = residual;
    report.failed_clauses.push_back("projection");
  }
  if (!context.power_validated) {
    report.notes.push_back("power validation bypassed: an exponent is below the matrix index");
  }
  return report;
}

AffineGenerator cline_f_generator(const ClineContext& context, const ClineProblem& problem) {
  const ConsistencyReport report = cline_consistent(context, problem);
  if (!report.consistent) {
    throw Error(ErrorCode::Inconsistent, "the equation has no solution");
  }
  const FieldSpec& field = problem.a.field();
  AffineGenerator f{*report.particular,
                    {LinearTerm{Matrix::identity(problem.a.rows(), field),
                                Matrix::identity(problem.b.rows(), field), 1},
                     LinearTerm{context.g_am.g * context.am, context.bn * context.g_bn.g, -1}},
                    problem.a.rows(),
                    problem.b.rows()};
  f.validate();
  return f;
}

AffineGenerator cline_g_generator(const ClineContext& context, const ClineProblem& problem,
                                  const Matrix& x0) {
  const ConsistencyReport report = cline_consistent(context, problem);
  if (!report.consistent) {
    throw Error(ErrorCode::Inconsistent, "the equation has no solution");
  }
  if (x0.rows() != problem.a.rows() || x0.cols() != problem.b.rows() ||
      x0.field() != problem.a.field()) {
    throw Error(ErrorCode::ShapeMismatch, "anchor has the wrong shape or field");
  }
  if (context.am * x0 * context.bn != problem.c) {
    throw Error(ErrorCode::NotASolution, "anchor does not solve the equation");
  }
  AffineGenerator g = cline_f_generator(context, problem);
  g.constant = x0;
  return g;
}

LinearMatrixSystem cline_system(const ClineProblem& problem) {
  validate_problem(problem);
  LinearMatrixSystem system;
  system.x_rows = problem.a.rows();
  system.x_cols = problem.b.rows();
  system.field = problem.a.field();
  system.constraints.push_back(LinearConstraint{
      {LinearTerm{power(problem.a, problem.m), power(problem.b, problem.n), 1}}, problem.c});
  return system;
}

}  // namespace mateq
