// The commuting-inner-inverse pair a X a = a, a^k X = X a^k: existence,
// canonical constructions, structural identities, closed forms.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "mateq/kcomm.hpp"
#include "mateq/linear_system.hpp"
#include "mateq/sweeps.hpp"

using mateq::AffineGenerator;
using mateq::AffineSolutionSet;
using mateq::ConsistencyReport;
using mateq::Error;
using mateq::ErrorCode;
using mateq::FieldSpec;
using mateq::KCommContext;
using mateq::KCommIdentityReport;
using mateq::KCommProblem;
using mateq::Matrix;

namespace {

void check_error(ErrorCode expected, const std::function<void()>& body) {
  try {
    body();
    FAIL_CHECK("expected error " << mateq::to_string(expected) << ", none thrown");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

bool solves_pair(const KCommProblem& prob, const Matrix& x) {
  const Matrix ak = mateq::power(prob.a, prob.k);
  return prob.a * x * prob.a == prob.a && ak * x == x * ak;
}

}  // namespace

TEST_CASE("the nilpotent landmark: inconsistent below the index, consistent at it") {
  const FieldSpec f2 = FieldSpec::gf(2);
  const Matrix a = Matrix::from_ints(f2, {{0, 1}, {0, 0}});  // index 2

  // k = 1: any inner inverse has x21 = 1, but commuting with a forces x21 = 0.
  const KCommProblem below{a, 1};
  CHECK_FALSE(mateq::find_kcomm_inverse(below).has_value());
  const ConsistencyReport r1 = mateq::kcomm_consistent(below);
  CHECK_FALSE(r1.consistent);
  CHECK(r1.failed_clauses == std::vector<std::string>{"no-commuting-inner-inverse"});

  // k = 2: a^2 = 0 commutes with everything, so any inner inverse works.
  const KCommProblem at{a, 2};
  const std::optional<KCommContext> ctx = mateq::find_kcomm_inverse(at);
  REQUIRE(ctx.has_value());
  CHECK(solves_pair(at, ctx->abar));
  CHECK(solves_pair(at, ctx->xhat));
  CHECK(ctx->xhat == ctx->abar * a * ctx->abar);
  CHECK(ctx->index_a == 2);
  CHECK_FALSE(ctx->nonsingular);

  const ConsistencyReport r2 = mateq::kcomm_consistent(at);
  REQUIRE(r2.consistent);
  CHECK(*r2.particular == ctx->xhat);
}

TEST_CASE("nonsingular coefficients have exactly the ordinary inverse") {
  const FieldSpec q = FieldSpec::rationals();
  const Matrix a = Matrix::from_ints(q, {{2, 1}, {1, 1}});
  const KCommProblem prob{a, 1};
  const std::optional<KCommContext> ctx = mateq::find_kcomm_inverse(prob);
  REQUIRE(ctx.has_value());
  CHECK(ctx->nonsingular);
  CHECK(a * ctx->abar == Matrix::identity(2, q));
  CHECK(ctx->xhat == ctx->abar);

  const AffineSolutionSet oracle = mateq::solve_linear_system(mateq::kcomm_system(prob));
  REQUIRE(oracle.consistent);
  CHECK(oracle.dimension() == 0);

  const AffineGenerator f = mateq::kcomm_f_generator(*ctx, prob);
  CHECK(mateq::is_reproductive(f).reproductive);
  CHECK(mateq::apply(f, Matrix::from_ints(q, {{7, -1}, {4, 2}})) == ctx->abar);
}

TEST_CASE("a positive-dimensional pair, solved by hand") {
  // a = diag(1,0), k = 1: solutions are exactly diag(1, t).
  const FieldSpec f3 = FieldSpec::gf(3);
  const Matrix a = Matrix::from_ints(f3, {{1, 0}, {0, 0}});
  const KCommProblem prob{a, 1};
  const std::optional<KCommContext> ctx = mateq::find_kcomm_inverse(prob);
  REQUIRE(ctx.has_value());
  CHECK(ctx->abar == a);  // canonical particular: free coordinates zero
  CHECK(ctx->xhat == a);

  const AffineSolutionSet oracle = mateq::solve_linear_system(mateq::kcomm_system(prob));
  REQUIRE(oracle.consistent);
  CHECK(oracle.dimension() == 1);
  const std::vector<Matrix> all = mateq::enumerate_solutions(oracle);
  REQUIRE(all.size() == 3);
  for (const Matrix& x : all) {
    CHECK(solves_pair(prob, x));
    CHECK(x.at(0, 0).is_one());
    CHECK(x.at(0, 1).is_zero());
    CHECK(x.at(1, 0).is_zero());
  }

  const AffineGenerator f = mateq::kcomm_f_generator(*ctx, prob);
  CHECK(mateq::is_reproductive(f).reproductive);
  CHECK(mateq::sets_equal(mateq::image_of(f), oracle));

  // Anchored at the non-canonical solution diag(1,1).
  const Matrix other = Matrix::identity(2, f3);
  REQUIRE(solves_pair(prob, other));
  const AffineGenerator g = mateq::kcomm_g_generator(*ctx, prob, other);
  const mateq::ReproVerdict v = mateq::is_reproductive(g);
  CHECK_FALSE(v.reproductive);
  CHECK(v.defect == other - ctx->xhat);
  CHECK(mateq::is_reproductive(mateq::kcomm_g_generator(*ctx, prob, ctx->xhat)).reproductive);

  check_error(ErrorCode::NotASolution, [&] {
    (void)mateq::kcomm_g_generator(*ctx, prob, Matrix::zeros(2, 2, f3));
  });
}

TEST_CASE("structural identities hold, with and without an anchor") {
  const FieldSpec f3 = FieldSpec::gf(3);
  const Matrix a = Matrix::from_ints(f3, {{1, 0}, {0, 0}});
  const KCommProblem prob{a, 1};
  const KCommContext ctx = *mateq::find_kcomm_inverse(prob);

  const KCommIdentityReport bare = mateq::kcomm_identity_report(ctx, prob);
  CHECK(bare.all_hold);
  CHECK(bare.items.size() == 2);
  CHECK(bare.items[0].name == "powers-commute");
  CHECK(bare.items[1].name == "power-bridge");
  for (const auto& item : bare.items) CHECK(item.defect.is_zero());

  const Matrix anchor = Matrix::identity(2, f3);
  const KCommIdentityReport anchored = mateq::kcomm_identity_report(ctx, prob, anchor);
  CHECK(anchored.all_hold);
  REQUIRE(anchored.items.size() == 5);
  CHECK(anchored.items[2].name == "anchor-left-shadow");
  CHECK(anchored.items[3].name == "anchor-right-shadow");
  CHECK(anchored.items[4].name == "anchor-fixed-point");
}

TEST_CASE("every solution is a fixed point of the closed form") {
  // The generator's image is the whole solution set and each solution maps to
  // itself — verified exhaustively on a positive-dimensional GF(2) instance.
  const FieldSpec f2 = FieldSpec::gf(2);
  const Matrix a = Matrix::from_ints(f2, {{1, 0}, {0, 0}});
  const KCommProblem prob{a, 1};
  const KCommContext ctx = *mateq::find_kcomm_inverse(prob);
  const AffineGenerator f = mateq::kcomm_f_generator(ctx, prob);
  const AffineSolutionSet oracle = mateq::solve_linear_system(mateq::kcomm_system(prob));
  int fixed = 0;
  for (const Matrix& x : mateq::enumerate_solutions(oracle)) {
    CHECK(mateq::apply(f, x) == x);
    ++fixed;
  }
  CHECK(fixed == 2);
  // And every input lands inside the solution set.
  for (const Matrix& y : mateq::all_matrices(2, 2, f2)) {
    CHECK(mateq::contains(oracle, mateq::apply(f, y)));
  }
}

TEST_CASE("a power at the index is always consistent") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 150; ++i) {
    const Matrix a = mateq::random_residue_matrix(rng, 3, 3, FieldSpec::gf(2));
    const unsigned k =
        static_cast<unsigned>(std::max<std::size_t>(mateq::index_of(a), 1));
    const KCommProblem prob{a, k};
    const std::optional<KCommContext> ctx = mateq::find_kcomm_inverse(prob);
    REQUIRE(ctx.has_value());
    CHECK(solves_pair(prob, ctx->abar));
    CHECK(solves_pair(prob, ctx->xhat));
    CHECK(mateq::kcomm_identity_report(*ctx, prob).all_hold);
  }
}

TEST_CASE("user-supplied candidates are verified then honored") {
  const FieldSpec f3 = FieldSpec::gf(3);
  const Matrix a = Matrix::from_ints(f3, {{1, 0}, {0, 0}});
  const KCommProblem prob{a, 1};

  // The identity solves both conditions for this projector.
  const Matrix user = Matrix::identity(2, f3);
  const std::optional<KCommContext> ctx = mateq::find_kcomm_inverse(prob, user);
  REQUIRE(ctx.has_value());
  CHECK(ctx->abar == user);
  CHECK(ctx->xhat == user * a * user);

  // An inner inverse that does not commute is rejected, not silently replaced.
  const FieldSpec f2 = FieldSpec::gf(2);
  const Matrix n = Matrix::from_ints(f2, {{0, 1}, {0, 0}});
  const KCommProblem nil{n, 2};
  const Matrix bad = Matrix::from_ints(f2, {{0, 0}, {0, 1}});  // fails n*X*n == n
  check_error(ErrorCode::InvalidOneInverse,
              [&] { (void)mateq::find_kcomm_inverse(nil, bad); });
}

TEST_CASE("problem validation") {
  const FieldSpec q = FieldSpec::rationals();
  check_error(ErrorCode::NotSquare, [&] {
    (void)mateq::find_kcomm_inverse(KCommProblem{Matrix::zeros(2, 3, q), 1});
  });
  check_error(ErrorCode::ValidationError, [&] {
    (void)mateq::find_kcomm_inverse(KCommProblem{Matrix::identity(2, q), 0});
  });
}
