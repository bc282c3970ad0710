#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "poisson_zeta/bernoulli.hpp"
#include "poisson_zeta/errors.hpp"
#include "poisson_zeta/estimator.hpp"
#include "poisson_zeta/oracle.hpp"

using namespace poisson_zeta;
using namespace poisson_zeta::oracle;

namespace {

const double kPi = std::numbers::pi;

}  // namespace

TEST(Oracle, DirectZetaKnownValues) {
  EXPECT_NEAR(direct_zeta(SParameter(4.0, 0.0), 1e-9).re.to_double(), std::pow(kPi, 4) / 90, 1e-9);
  EXPECT_NEAR(direct_zeta(Complex(2.0, 0.0, 128), 1e-6).re.to_double(), kPi * kPi / 6, 1e-6);
  EXPECT_NEAR(direct_zeta(SParameter(6.0, 0.0), 1e-9).re.to_double(), std::pow(kPi, 6) / 945, 1e-9);
}

TEST(Oracle, DirectZetaRespectsEpsContract) {
  for (long s : {4L, 6L, 8L}) {
    for (double eps : {1e-6, 1e-9, 1e-12}) {
      const Complex got = direct_zeta(SParameter(static_cast<double>(s), 0.0), eps);
      const Real gap = abs(got - Complex(bernoulli::zeta_even(s)));
      EXPECT_LE(gap.to_double(), eps) << s << " " << eps;
      EXPECT_GT(gap.to_double(), 0.0);
    }
  }
}

TEST(Oracle, DirectZetaTermCount) {
  // N^(-3)/3 <= 1e-9 first holds at N = 694.
  EXPECT_EQ(direct_zeta_terms(4.0, 1e-9), 694u);
  EXPECT_THROW(direct_zeta_terms(1.0, 1e-9), DomainError);
  EXPECT_THROW(direct_zeta_terms(4.0, 0.0), DomainError);
}

TEST(Oracle, DirectZetaCapIsAResourceError) {
  EXPECT_THROW(direct_zeta(SParameter(4.0, 0.0), 1e-30, 1000), ResourceError);
  EXPECT_THROW(direct_zeta(Complex(2.0, 0.0, 128), 1e-12), ResourceError);
}

TEST(Oracle, ZetaReferenceHierarchy) {
  const Complex even = zeta_reference(SParameter(4.0, 0.0));
  EXPECT_TRUE(even.re == bernoulli::zeta_even(4));
  const Complex odd = zeta_reference(SParameter(5.0, 0.0));
  EXPECT_NEAR(odd.re.to_double(), 1.0369277551433699, 1e-10);
}

TEST(Oracle, FourierClosedFormFirstOrder) {
  const auto poly = smoothing::build_polynomial(SParameter(4.0, 0.0), 1);
  const Complex cf = p_fourier_closed_form(poly);
  EXPECT_LT(abs(cf + Real(13L, 128) / 15).to_double(), 1e-30);
  const double d3 = abs(truncated_P(poly, 1000) - cf).to_double();
  const double d4 = abs(truncated_P(poly, 10000) - cf).to_double();
  EXPECT_LE(d3, 1e-2);
  EXPECT_LT(d4, d3);
}

TEST(Oracle, FourierTruncationAgreesAtThirdOrder) {
  const auto poly = smoothing::build_polynomial(SParameter(4.0, 0.0), 3);
  const Complex cf = p_fourier_closed_form(poly);
  EXPECT_LE(abs(truncated_P(poly, 20000) - cf).to_double(), 1e-3 * (1 + abs(cf).to_double()));
}

TEST(Oracle, ZeroPolynomialFourier) {
  const auto zero = smoothing::SmoothingPolynomial::zero(SParameter(4.0, 0.0), 2);
  EXPECT_TRUE(p_fourier_closed_form(zero).re.is_zero());
  EXPECT_TRUE(truncated_P(zero, 1).re.is_zero());
  EXPECT_THROW(truncated_P(zero, 0), DomainError);
}

TEST(Oracle, FAtZero) {
  const auto g4 = smoothing::build_spliced(SParameter(4.0, 0.0), 1);
  EXPECT_LT(abs(f_at_zero(g4) - Real(128L, 128) / 15).to_double(), 1e-30);
  const auto g6 = smoothing::build_spliced(SParameter(6.0, 0.0), 1);
  const Complex want = 2 * smoothing::integral_p(g6.poly()) + Real(2L, 128) / 5;
  EXPECT_LT(abs(f_at_zero(g6) - want).to_double(), 1e-30);
}

TEST(Oracle, FAtZeroQuadratureCrossCheck) {
  for (auto [re, im, r] : {std::tuple{4.0, 0.0, 1}, std::tuple{4.0, 1.0, 6}, std::tuple{6.0, 0.0, 10}}) {
    const auto g = smoothing::build_spliced(SParameter(re, im), r);
    const Complex f0 = f_at_zero(g);
    const double gap = std::abs(f_at_zero_quadrature(g) - f0.to_std());
    EXPECT_LE(gap, 1e-8 * (1 + abs(f0).to_double())) << re << "+" << im << "i r=" << r;
  }
}

TEST(Oracle, ExtractRFirstOrder) {
  const SParameter s(4.0, 0.0);
  const RemainderExtraction x = extract_R(s, 1, Complex(bernoulli::zeta_even(4)));
  EXPECT_NEAR(x.magnitude.to_double(), 2 * (std::pow(kPi, 4) / 90 - 5.0 / 6), 1e-12);
  EXPECT_NEAR(x.bound.to_double(), 32.0 / 15, 1e-15);
  EXPECT_TRUE(x.pass);
  // Consistent with the first-order tail estimate: R/2 = zeta(4) - 5/6.
  const Real half = (Complex(bernoulli::zeta_even(4)) - estimator::tail_estimate(s, 1)).re;
  EXPECT_NEAR((x.magnitude / 2).to_double(), half.to_double(), 1e-20);
}

TEST(Oracle, ExtractRTenthOrder) {
  const RemainderExtraction x = extract_R(SParameter(4.0, 0.0), 10, Complex(bernoulli::zeta_even(4)));
  EXPECT_TRUE(x.pass);
  EXPECT_LE(x.magnitude.to_double(), 2.1334e-5);
}

TEST(Oracle, ExtractRFailureIsReportedNotThrown) {
  const RemainderExtraction x = extract_R(SParameter(4.0, 0.0), 10, Complex(1.0, 0.0, 128));
  EXPECT_FALSE(x.pass);
}

TEST(Oracle, HalfSums) {
  for (int k = 1; k <= 5; ++k) {
    const HalfSum h = half_sum_check(k, 10000);
    EXPECT_NEAR(h.re.to_double(), 0.5, 1e-3) << k;
    EXPECT_LE(abs(h.im).to_double(), 1e-12) << k;
  }
  // N = 1, k = 2: 1/3 + 2 * 2/(2 pi)^2
  const HalfSum h = half_sum_check(2, 1);
  EXPECT_NEAR(h.re.to_double(), 1.0 / 3 + 1.0 / (kPi * kPi), 1e-15);
  EXPECT_THROW(half_sum_check(0, 10), DomainError);
  EXPECT_THROW(half_sum_check(6, 10), DomainError);
}

TEST(Oracle, SpliceGapSeparatesSmoothFromKinked) {
  const SParameter s(4.0, 0.0);
  const auto g = smoothing::build_spliced(s, 5);
  EXPECT_LE(splice_gap_ratio(g), 0.2);

  // Nudging the top coefficient breaks the value, slope and curvature match.
  std::vector<Complex> a = g.poly().coefficients();
  a.back() += Real(1e-12, 128);
  const smoothing::SplicedFunction kinked(smoothing::SmoothingPolynomial(s, 5, a), smoothing::TailFunction(s, 5));
  EXPECT_GT(splice_gap_ratio(kinked), 0.5);
}

TEST(Oracle, CheckPassMatchesTolerance) {
  EXPECT_TRUE(make_check("a", 0.5, 0.5).pass);
  EXPECT_FALSE(make_check("a", 0.6, 0.5).pass);
  EXPECT_FALSE(make_check("a", std::nan(""), 0.5).pass);
}

TEST(Oracle, ValidationTenthOrder) {
  const ValidationReport report = run_validation(SParameter(4.0, 0.0), 10);
  EXPECT_TRUE(report.all_passed());
  EXPECT_TRUE(report.skipped.empty());
  EXPECT_TRUE(std::is_sorted(report.checks.begin(), report.checks.end(),
                             [](const Check& a, const Check& b) { return a.name < b.name; }));
  for (const Check& c : report.checks) {
    EXPECT_EQ(c.pass, c.residual <= c.tolerance) << c.name;
    EXPECT_TRUE(c.pass) << c.name << " " << c.residual << " > " << c.tolerance;
  }
}

TEST(Oracle, ValidationFirstOrderSkipsHeadSum) {
  const ValidationReport report = run_validation(SParameter(4.0, 0.0), 1);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.skipped, std::vector<std::string>{"identity.head_sum"});
}

TEST(Oracle, ValidationComplexUsesDirectReference) {
  const ValidationReport report = run_validation(SParameter(4.0, 1.0), 6);
  for (const Check& c : report.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.residual << " > " << c.tolerance;
}

TEST(Oracle, SuiteSelection) {
  ValidationConfig config;
  config.suite = parse_suite("half-sum");
  const ValidationReport report = run_validation(SParameter(4.0, 0.0), 10, config);
  ASSERT_EQ(report.checks.size(), 5u);
  EXPECT_EQ(report.checks.front().name, "half_sum.k1");
  EXPECT_THROW(parse_suite("nope"), DomainError);
  for (const char* name : {"all", "identity", "half-sum", "bernoulli", "smoothing"}) {
    EXPECT_EQ(suite_name(parse_suite(name)), name);
  }
}

TEST(Oracle, ValidationSeedChangesSamplesOnly) {
  ValidationConfig config;
  config.suite = Suite::kSmoothing;
  config.seed = 12345;
  const ValidationReport report = run_validation(SParameter(5.0, 1.0), 7, config);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.context.config.seed, 12345u);
}
