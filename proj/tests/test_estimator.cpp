#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "poisson_zeta/bernoulli.hpp"
#include "poisson_zeta/errors.hpp"
#include "poisson_zeta/estimator.hpp"
#include "poisson_zeta/oracle.hpp"
#include "test_support.hpp"

using namespace poisson_zeta;
using namespace poisson_zeta::estimator;

TEST(Estimator, RemainderBoundFormula) {
  EXPECT_NEAR(remainder_bound(SParameter(4.0, 0.0), 10).to_double(), 32.0 / (15 * 1e5), 1e-20);
  EXPECT_NEAR(remainder_bound(SParameter(4.0, 0.0), 1).to_double(), 32.0 / 15, 1e-15);
  EXPECT_LT(remainder_bound(SParameter(4.0, 0.0), 20), remainder_bound(SParameter(4.0, 0.0), 10));
  EXPECT_THROW(remainder_bound(SParameter(4.0, 0.0), 0), DomainError);
}

TEST(Estimator, TailEstimateValues) {
  EXPECT_NEAR(tail_estimate(SParameter(4.0, 0.0), 10).re.to_double(), 1.0 / 3000 + 1.0 / 20000, 1e-18);
  EXPECT_NEAR(tail_estimate(SParameter(4.0, 0.0), 1).re.to_double(), 5.0 / 6, 1e-16);
  EXPECT_NEAR(tail_estimate(SParameter(6.0, 0.0), 1).re.to_double(), 0.7, 1e-16);
  const long double true_tail = std::pow(std::numbers::pi_v<long double>, 4) / 90 -
                                test_support::brute_inverse_power_sum(4.0, 1, 9);
  const double error = std::abs(tail_estimate(SParameter(4.0, 0.0), 10).re.to_double() - static_cast<double>(true_tail));
  EXPECT_NEAR(error, 3.31e-6, 0.01e-6);
}

TEST(Estimator, HeadSumMatchesDirectSum) {
  EXPECT_NEAR(head_sum_bernoulli(smoothing::build_polynomial(SParameter(4.0, 0.0), 3)).re.to_double(), 1.0625, 1e-10);
  EXPECT_NEAR(head_sum_bernoulli(smoothing::build_polynomial(SParameter(4.0, 0.0), 2)).re.to_double(), 1.0, 1e-10);
  EXPECT_NEAR(head_sum_bernoulli(smoothing::build_polynomial(SParameter(5.0, 0.0), 4)).re.to_double(),
              1.0 + std::pow(2.0, -5) + std::pow(3.0, -5), 1e-10);
  for (double re : {4.0, 5.0, 6.0}) {
    for (double im : {0.0, 1.0}) {
      for (int r = 2; r <= 12; ++r) {
        const std::complex<double> s(re, im);
        std::complex<double> direct = 0;
        for (int n = 1; n < r; ++n) direct += std::pow(static_cast<double>(n), -s);
        const std::complex<double> head =
            head_sum_bernoulli(smoothing::build_polynomial(SParameter(re, im), r)).to_std();
        EXPECT_LE(std::abs(head - direct) / std::abs(direct), 1e-10) << re << "+" << im << "i r=" << r;
      }
    }
  }
  EXPECT_THROW(head_sum_bernoulli(smoothing::build_polynomial(SParameter(4.0, 0.0), 1)), DomainError);
}

TEST(Estimator, ReproducesZetaFour) {
  const ZetaEstimate est = zeta_estimate(SParameter(4.0, 0.0), 10);
  const double ref = std::pow(std::numbers::pi, 4) / 90;
  EXPECT_LE(std::abs(est.value.re.to_double() - ref), 1.07e-5);
  EXPECT_NEAR(est.bound.to_double(), 16.0 / 15e5, 1e-18);
  EXPECT_TRUE(est.value.re == est.head.re + est.tail.re);
}

TEST(Estimator, BoundFieldIsHalfTheRemainderBound) {
  for (int r : {1, 5, 12}) {
    const SParameter s(5.0, 2.0);
    EXPECT_TRUE(zeta_estimate(s, r).bound == remainder_bound(s, r) / 2);
  }
}

TEST(Estimator, ReproducesZetaSix) {
  const ZetaEstimate est = zeta_estimate(SParameter(6.0, 0.0), 8);
  EXPECT_LE(abs(est.value - Complex(bernoulli::zeta_even(6))), est.bound);
}

TEST(Estimator, FirstOrderHasEmptyHead) {
  const ZetaEstimate est = zeta_estimate(SParameter(4.0, 0.0), 1);
  EXPECT_TRUE(est.head.re.is_zero());
  EXPECT_NEAR(est.value.re.to_double(), 5.0 / 6, 1e-16);
}

TEST(Estimator, BoundHoldsAgainstDirectSums) {
  for (double re : {4.0, 5.0, 6.0, 8.0}) {
    const SParameter s(re, 0.0);
    const Complex reference = oracle::direct_zeta(s, 1e-12);
    for (int r = 2; r <= 12; ++r) {
      const ZetaEstimate est = zeta_estimate(s, r);
      EXPECT_LE(abs(est.value - reference), est.bound) << re << " r=" << r;
    }
  }
  const ZetaEstimate complex_est = zeta_estimate(SParameter(4.0, 1.0), 10);
  EXPECT_LE(abs(complex_est.value - oracle::direct_zeta(SParameter(4.0, 1.0), 1e-9)), complex_est.bound);
}

TEST(Estimator, ErrorShrinksWithOrder) {
  const Complex ref(bernoulli::zeta_even(4));
  EXPECT_LT(abs(zeta_estimate(SParameter(4.0, 0.0), 12).value - ref),
            abs(zeta_estimate(SParameter(4.0, 0.0), 4).value - ref));
}

TEST(Estimator, CrossoverRadius) {
  EXPECT_NEAR(crossover_radius(SParameter(4.0, 0.0)).to_double(), 4 * std::sqrt(3.0 / 15), 1e-15);
  EXPECT_NEAR(crossover_radius(SParameter(8.0, 0.0)).to_double(), 8 * std::sqrt(7.0 / 27), 1e-15);
  EXPECT_GT(crossover_radius(SParameter(10.0, 0.0)), crossover_radius(SParameter(5.0, 0.0)));
}

TEST(Estimator, EstimateBoundBeatsBracketPastCrossover) {
  for (double re : {4.0, 5.0, 6.0, 8.0}) {
    for (double im : {0.0, 1.0, 3.0}) {
      const SParameter s(re, im);
      const double radius = crossover_radius(s).to_double();
      for (int r = 2; r <= 30; ++r) {
        if (r < radius) continue;
        EXPECT_LE(remainder_bound(s, r) / 2, naive_bracket(s, r).lower) << re << "+" << im << "i r=" << r;
      }
    }
  }
}

TEST(Estimator, NaiveBracket) {
  const Bracket b = naive_bracket(SParameter(4.0, 0.0), 10);
  EXPECT_NEAR(b.lower.to_double(), 1.0 / 3000, 1e-18);
  EXPECT_NEAR(b.upper.to_double(), 1.0 / (3 * 729.0), 1e-18);
  const Bracket b2 = naive_bracket(SParameter(4.0, 0.0), 2);
  EXPECT_NEAR(b2.lower.to_double(), 1.0 / 24, 1e-16);
  EXPECT_NEAR(b2.upper.to_double(), 1.0 / 3, 1e-16);
  EXPECT_THROW(naive_bracket(SParameter(4.0, 0.0), 1), DomainError);

  for (double re : {4.0, 5.5, 7.0}) {
    for (int r = 2; r <= 12; ++r) {
      const SParameter s(re, 0.0);
      const Bracket br = naive_bracket(s, r);
      const double tail = static_cast<double>(test_support::brute_inverse_power_sum(re, r, 200'000));
      EXPECT_LE(br.lower.to_double(), tail * (1 + 1e-12));
      EXPECT_GE(br.upper.to_double(), tail);
      EXPECT_LE(br.upper.to_double(), 1.0 / (3 * std::pow(r - 1.0, 3)) * (1 + 1e-15));
    }
  }
}
