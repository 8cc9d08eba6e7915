#include "mateq/kcomm.hpp"

namespace mateq {
namespace {

void validate_problem(const KCommProblem& problem) {
  if (!problem.a.is_square()) {
    throw Error(ErrorCode::NotSquare, "the coefficient must be square");
  }
  if (problem.k < 1) {
    throw Error(ErrorCode::ValidationError, "the power must be at least 1");
  }
}

bool solves_pair(const KCommProblem& problem, const Matrix& ak, const Matrix& x) {
  return problem.a * x * problem.a == problem.a && ak * x == x * ak;
}

}  // namespace

LinearMatrixSystem kcomm_system(const KCommProblem& problem) {
  validate_problem(problem);
  const std::size_t n = problem.a.rows();
  const FieldSpec& field = problem.a.field();
  const Matrix ak = power(problem.a, problem.k);
  const Matrix id = Matrix::identity(n, field);

  LinearMatrixSystem system;
  system.x_rows = n;
  system.x_cols = n;
  system.field = field;
  system.constraints.push_back(
      LinearConstraint{{LinearTerm{problem.a, problem.a, 1}}, problem.a});
  system.constraints.push_back(LinearConstraint{
      {LinearTerm{ak, id, 1}, LinearTerm{id, ak, -1}}, Matrix::zeros(n, n, field)});
  return system;
}

std::optional<KCommContext> find_kcomm_inverse(const KCommProblem& problem,
                                               const std::optional<Matrix>& abar_user) {
  validate_problem(problem);
  const Matrix ak = power(problem.a, problem.k);

  Matrix abar = Matrix::zeros(problem.a.rows(), problem.a.rows(), problem.a.field());
  if (abar_user) {
    if (abar_user->rows() != problem.a.rows() || abar_user->cols() != problem.a.cols() ||
        abar_user->field() != problem.a.field()) {
      throw Error(ErrorCode::InvalidOneInverse, "supplied candidate has the wrong shape or field");
    }
    if (!solves_pair(problem, ak, *abar_user)) {
      throw Error(ErrorCode::InvalidOneInverse,
                  "supplied candidate fails the defining pair of conditions");
    }
    abar = *abar_user;
  } else {
    const AffineSolutionSet set = solve_linear_system(kcomm_system(problem));
    if (!set.consistent) return std::nullopt;
    abar = *set.particular;
  }

  const Matrix xhat = abar * problem.a * abar;
  if (!solves_pair(problem, ak, xhat)) {
    throw Error(ErrorCode::NotASolution,
                "internal defect: the derived anchor failed the defining pair");
  }
  return KCommContext{ak,
                      abar,
                      power(abar, problem.k),
                      xhat,
                      index_of(problem.a),
                      rank(problem.a) == problem.a.rows()};
}

ConsistencyReport kcomm_consistent(const KCommProblem& problem,
                                   const std::optional<Matrix>& abar_user) {
  const std::optional<KCommContext> context = find_kcomm_inverse(problem, abar_user);

  ConsistencyReport report;
  report.consistent = context.has_value();
  if (context) {
    report.witnesses.emplace_back("ABAR", context->abar);
    report.particular = context->xhat;
  } else {
    report.failed_clauses.push_back("no-commuting-inner-inverse");
  }
  report.notes.push_back(std::string("the coefficient is ") +
                         (context ? (context->nonsingular ? "nonsingular" : "singular")
                                  : (rank(problem.a) == problem.a.rows() ? "nonsingular"
                                                                         : "singular")));
  return report;
}

AffineGenerator kcomm_f_generator(const KCommContext& context, const KCommProblem& problem) {
  validate_problem(problem);
  const std::size_t n = problem.a.rows();
  const FieldSpec& field = problem.a.field();
  const Matrix id = Matrix::identity(n, field);
  const Matrix abar_a = context.abar * problem.a;
  const Matrix a_abar = problem.a * context.abar;

  AffineGenerator f{context.xhat,
                    {LinearTerm{id, id, 1},
                     LinearTerm{id - abar_a, context.ak * context.abark, -1},
                     LinearTerm{context.abark * context.ak, id - a_abar, -1},
                     LinearTerm{abar_a, a_abar, -1}},
                    n,
                    n};
  f.validate();
  return f;
}

AffineGenerator kcomm_g_generator(const KCommContext& context, const KCommProblem& problem,
                                  const Matrix& x0) {
  AffineGenerator g = kcomm_f_generator(context, problem);
  if (x0.rows() != problem.a.rows() || x0.cols() != problem.a.cols() ||
      x0.field() != problem.a.field()) {
    throw Error(ErrorCode::ShapeMismatch, "anchor has the wrong shape or field");
  }
  if (!solves_pair(problem, context.ak, x0)) {
    throw Error(ErrorCode::NotASolution, "anchor does not satisfy the defining pair");
  }
  g.constant = x0;
  return g;
}

KCommIdentityReport kcomm_identity_report(const KCommContext& context, const KCommProblem& problem,
                                          const std::optional<Matrix>& x0) {
  KCommIdentityReport report;
  const auto add = [&report](const std::string& name, const Matrix& lhs, const Matrix& rhs) {
    KCommIdentityReport::Item item{name, lhs == rhs, lhs - rhs};
    report.all_hold = report.all_hold && item.holds;
    report.items.push_back(std::move(item));
  };

  add("powers-commute", context.ak * context.abark, context.abark * context.ak);
  add("power-bridge", context.ak * context.abark * context.ak, context.ak);

  if (x0) {
    const Matrix shadow = context.ak * (context.abark * context.abar);  // a^k * abar^(k+1)
    add("anchor-left-shadow", *x0 * context.ak * context.abark, shadow);
    add("anchor-right-shadow", context.abark * context.ak * *x0, shadow);
    add("anchor-fixed-point", apply(kcomm_f_generator(context, problem), *x0), *x0);
  }
  return report;
}

}  // namespace mateq
