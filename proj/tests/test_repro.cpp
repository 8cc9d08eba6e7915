// Affine generators and the exact idempotence (reproductivity) decision.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "mateq/generator.hpp"
#include "mateq/sweeps.hpp"

using mateq::AffineGenerator;
using mateq::AffineSolutionSet;
using mateq::Error;
using mateq::ErrorCode;
using mateq::FieldSpec;
using mateq::LinearTerm;
using mateq::Matrix;
using mateq::ReproVerdict;

namespace {

void check_error(ErrorCode expected, const std::function<void()>& body) {
  try {
    body();
    FAIL_CHECK("expected error " << mateq::to_string(expected) << ", none thrown");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

AffineGenerator make(Matrix constant, std::vector<LinearTerm> terms, std::size_t y_rows,
                     std::size_t y_cols) {
  AffineGenerator h{std::move(constant), std::move(terms), y_rows, y_cols};
  h.validate();
  return h;
}

}  // namespace

TEST_CASE("identity, constant, and shifted maps") {
  const FieldSpec q = FieldSpec::rationals();
  const Matrix i2 = Matrix::identity(2, q);
  const Matrix c = Matrix::from_ints(q, {{1, 2}, {3, 4}});

  // h(Y) = Y is idempotent.
  const AffineGenerator ident = make(Matrix::zeros(2, 2, q), {LinearTerm{i2, i2, 1}}, 2, 2);
  CHECK(mateq::apply(ident, c) == c);
  CHECK(mateq::is_reproductive(ident).reproductive);

  // h(Y) = C is idempotent (the linear part is zero).
  const AffineGenerator constant = make(c, {}, 2, 2);
  CHECK(mateq::apply(constant, i2) == c);
  const ReproVerdict cv = mateq::is_reproductive(constant);
  CHECK(cv.reproductive);
  CHECK(cv.linear_idempotent);
  CHECK(cv.constant_fixed);
  CHECK(cv.defect.is_zero());

  // h(Y) = C + Y is NOT idempotent when C != 0: h(h(0)) = 2C != C = h(0).
  const AffineGenerator shift = make(c, {LinearTerm{i2, i2, 1}}, 2, 2);
  const ReproVerdict sv = mateq::is_reproductive(shift);
  CHECK_FALSE(sv.reproductive);
  CHECK(sv.linear_idempotent);
  CHECK_FALSE(sv.constant_fixed);
  CHECK(sv.defect == c);  // h(h(0)) - h(0)

  // h(Y) = C + 2Y: the linear part is not idempotent either.
  const AffineGenerator doubled =
      make(c, {LinearTerm{i2.scaled(mateq::Scalar::rational(2, 1)), i2, 1}}, 2, 2);
  const ReproVerdict dv = mateq::is_reproductive(doubled);
  CHECK_FALSE(dv.reproductive);
  CHECK_FALSE(dv.linear_idempotent);
}

TEST_CASE("a projector generator is reproductive with the expected image") {
  const FieldSpec q = FieldSpec::rationals();
  const Matrix p = Matrix::from_ints(q, {{1, 0}, {0, 0}});
  const Matrix i2 = Matrix::identity(2, q);
  const AffineGenerator h = make(Matrix::zeros(2, 2, q), {LinearTerm{p, i2, 1}}, 2, 2);
  CHECK(mateq::is_reproductive(h).reproductive);

  const AffineSolutionSet image = mateq::image_of(h);
  REQUIRE(image.consistent);
  CHECK(image.dimension() == 2);  // first row free, second row zero
  CHECK(mateq::contains(image, Matrix::from_ints(q, {{5, -7}, {0, 0}})));
  CHECK_FALSE(mateq::contains(image, Matrix::from_ints(q, {{5, -7}, {1, 0}})));
}

TEST_CASE("defect equals the applied difference") {
  std::mt19937_64 rng(51);
  const FieldSpec f3 = FieldSpec::gf(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<LinearTerm> terms;
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      terms.push_back(LinearTerm{mateq::random_residue_matrix(rng, 2, 2, f3),
                                 mateq::random_residue_matrix(rng, 2, 2, f3),
                                 coin(rng) ? 1 : -1});
    }
    const AffineGenerator h =
        make(mateq::random_residue_matrix(rng, 2, 2, f3), std::move(terms), 2, 2);
    const ReproVerdict v = mateq::is_reproductive(h);
    const Matrix zero = Matrix::zeros(2, 2, f3);
    CHECK(v.defect == mateq::apply(h, mateq::apply(h, zero)) - mateq::apply(h, zero));
    CHECK(v.constant_fixed == v.defect.is_zero());
  }
}

TEST_CASE("the verdict matches exhaustive composition over GF(3)") {
  // Ground truth by definition: h is reproductive iff h(h(Y)) == h(Y) for
  // every Y — checkable exhaustively for 2x2 inputs over GF(3) (81 inputs).
  std::mt19937_64 rng(53);
  const FieldSpec f3 = FieldSpec::gf(3);
  const std::vector<Matrix> inputs = mateq::all_matrices(2, 2, f3);
  int reproductive_seen = 0;
  for (int i = 0; i < 60; ++i) {
    std::vector<LinearTerm> terms;
    std::uniform_int_distribution<int> nterms(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    // Half the samples use a projector pair so idempotent cases actually occur.
    if (coin(rng) == 0) {
      const Matrix p = Matrix::from_ints(f3, {{1, 0}, {0, 0}});
      terms.push_back(LinearTerm{p, Matrix::identity(2, f3), 1});
    } else {
      const int n = nterms(rng);
      for (int t = 0; t < n; ++t) {
        terms.push_back(LinearTerm{mateq::random_residue_matrix(rng, 2, 2, f3),
                                   mateq::random_residue_matrix(rng, 2, 2, f3),
                                   coin(rng) ? 1 : -1});
      }
    }
    std::uniform_int_distribution<int> zero_constant(0, 1);
    const Matrix c = zero_constant(rng) == 0 ? Matrix::zeros(2, 2, f3)
                                             : mateq::random_residue_matrix(rng, 2, 2, f3);
    const AffineGenerator h = make(c, std::move(terms), 2, 2);

    bool brute = true;
    for (const Matrix& y : inputs) {
      const Matrix once = mateq::apply(h, y);
      if (mateq::apply(h, once) != once) {
        brute = false;
        break;
      }
    }
    const ReproVerdict v = mateq::is_reproductive(h);
    CHECK(v.reproductive == brute);
    if (v.reproductive) ++reproductive_seen;
  }
  CHECK(reproductive_seen > 0);  // the sample must exercise both outcomes
  CHECK(reproductive_seen < 60);
}

TEST_CASE("image enumeration equals direct evaluation") {
  std::mt19937_64 rng(59);
  const FieldSpec f2 = FieldSpec::gf(2);
  const std::vector<Matrix> inputs = mateq::all_matrices(2, 2, f2);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<LinearTerm> terms;
    const int n = 1 + coin(rng);
    for (int t = 0; t < n; ++t) {
      terms.push_back(LinearTerm{mateq::random_residue_matrix(rng, 2, 2, f2),
                                 mateq::random_residue_matrix(rng, 2, 2, f2), 1});
    }
    const AffineGenerator h =
        make(mateq::random_residue_matrix(rng, 2, 2, f2), std::move(terms), 2, 2);

    const AffineSolutionSet image = mateq::image_of(h);
    std::vector<Matrix> direct;
    for (const Matrix& y : inputs) direct.push_back(mateq::apply(h, y));
    std::sort(direct.begin(), direct.end(),
              [](const Matrix& a, const Matrix& b) { return a.compare(b) < 0; });
    direct.erase(std::unique(direct.begin(), direct.end()), direct.end());

    std::vector<Matrix> enumerated = mateq::enumerate_solutions(image);
    std::sort(enumerated.begin(), enumerated.end(),
              [](const Matrix& a, const Matrix& b) { return a.compare(b) < 0; });
    CHECK(direct == enumerated);
  }
}

TEST_CASE("shape discipline") {
  const FieldSpec q = FieldSpec::rationals();
  // A generator from 2x3 inputs to 3x2 outputs cannot be composed with itself.
  const AffineGenerator skew = make(
      Matrix::zeros(3, 2, q),
      {LinearTerm{Matrix::zeros(3, 2, q), Matrix::zeros(3, 2, q), 1}}, 2, 3);
  CHECK(mateq::apply(skew, Matrix::zeros(2, 3, q)) == Matrix::zeros(3, 2, q));
  check_error(ErrorCode::NotComposable, [&] { (void)mateq::is_reproductive(skew); });
  CHECK(mateq::image_of(skew).consistent);  // the image is still well-defined

  const AffineGenerator ident = make(
      Matrix::zeros(2, 2, q),
      {LinearTerm{Matrix::identity(2, q), Matrix::identity(2, q), 1}}, 2, 2);
  check_error(ErrorCode::ShapeMismatch,
              [&] { (void)mateq::apply(ident, Matrix::zeros(2, 3, q)); });
  check_error(ErrorCode::FieldMismatch,
              [&] { (void)mateq::apply(ident, Matrix::zeros(2, 2, FieldSpec::gf(2))); });
}
