#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss.hpp>

#include "poisson_zeta/errors.hpp"
#include "poisson_zeta/smoothing.hpp"

using namespace poisson_zeta;
using namespace poisson_zeta::smoothing;

namespace {

double rel(const Complex& got, const Complex& want) { return (abs(got - want) / abs(want)).to_double(); }

}  // namespace

TEST(Smoothing, TailValuesAndSymmetry) {
  const TailFunction h(SParameter(4.0, 0.0), 1);
  EXPECT_EQ(eval_h(h, 2.0).re.to_double(), 1.0 / 16);
  EXPECT_EQ(eval_h(h, -2.0).re.to_double(), 1.0 / 16);
  EXPECT_EQ(eval_h(h, 2.0, 1).re.to_double(), -1.0 / 8);
  EXPECT_EQ(eval_h(h, -2.0, 1).re.to_double(), 1.0 / 8);
  EXPECT_EQ(eval_h(h, 2.0, 2).re.to_double(), 20.0 / 64);
  EXPECT_THROW(eval_h(h, 0.5), DomainError);
  EXPECT_THROW(eval_h(h, 2.0, 3), DomainError);
  EXPECT_THROW(TailFunction(SParameter(4.0, 0.0), 0), DomainError);
}

TEST(Smoothing, HandSolvedFirstOrderPolynomial) {
  const SmoothingPolynomial p = build_polynomial(SParameter(4.0, 0.0), 1);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_NEAR(eval_p(p, 0.0).re.to_double(), 6.0, 1e-30);
  EXPECT_NEAR(eval_p(p, 1.0).re.to_double(), 1.0, 1e-30);
  EXPECT_NEAR(eval_p(p, 1.0, 2).re.to_double(), 20.0, 1e-28);
  EXPECT_EQ(eval_p(p, 0.0, 1).re.to_double(), 0.0);
  EXPECT_NEAR(integral_p(p).re.to_double(), 59.0 / 15, 1e-30);
}

TEST(Smoothing, InterpolatesAndMatchesTail) {
  for (double im : {0.0, 1.0}) {
    for (int r : {3, 7, 12}) {
      const SParameter s(5.0, im);
      const SplicedFunction g = build_spliced(s, r);
      for (int n = 1; n <= r; ++n) {
        const Real x(static_cast<long>(n), 128);
        EXPECT_LE(rel(eval_p(g.poly(), x), pow_positive(x, -s.value())), kMatchingTolerance);
      }
      for (int k = 0; k <= 2; ++k) {
        for (double x : {1.0 * r, -1.0 * r}) {
          EXPECT_LE(rel(eval_p(g.poly(), x, k), eval_h(g.tail(), x, k)), kMatchingTolerance);
        }
      }
    }
  }
}

TEST(Smoothing, SecondNodeOfThirdOrder) {
  const SmoothingPolynomial p = build_polynomial(SParameter(4.0, 0.0), 3);
  EXPECT_NEAR(eval_p(p, 2.0).re.to_double(), 0.0625, 1e-25);
}

TEST(Smoothing, IntegralAgreesWithQuadrature) {
  const SmoothingPolynomial p = build_polynomial(SParameter(4.0, 0.0), 2);
  auto f = [&p](double x) { return eval_p(p, x).re.to_double(); };
  const double quad = boost::math::quadrature::gauss<double, 20>::integrate(f, 0.0, 2.0);
  EXPECT_NEAR(integral_p(p).re.to_double(), quad, 1e-12);
}

TEST(Smoothing, SplicedDispatch) {
  const SplicedFunction g = build_spliced(SParameter(4.0, 0.0), 1);
  EXPECT_EQ(eval_g(g, 3.0).re.to_double(), 1.0 / 81);
  EXPECT_NEAR(eval_g(g, 0.0).re.to_double(), 6.0, 1e-30);
  EXPECT_NEAR(eval_g(g, 1.0).re.to_double(), eval_p(g.poly(), 1.0).re.to_double(), 1e-12);
  EXPECT_EQ(eval_g(g, 1.0).re.to_double(), 1.0);
}

TEST(Smoothing, ZeroPolynomial) {
  const SmoothingPolynomial z = SmoothingPolynomial::zero(SParameter(4.0, 0.0), 3);
  EXPECT_TRUE(integral_p(z).re.is_zero());
  EXPECT_TRUE(eval_p(z, 1.5).re.is_zero());
}

TEST(Smoothing, MismatchedPiecesRejected) {
  const SParameter s(4.0, 0.0);
  EXPECT_THROW(SplicedFunction(build_polynomial(s, 2), TailFunction(s, 3)), DomainError);
  EXPECT_THROW(SplicedFunction(build_polynomial(s, 2), TailFunction(SParameter(5.0, 0.0), 2)), DomainError);
  EXPECT_THROW(SmoothingPolynomial(s, 2, {}), DomainError);
}
