#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "poisson_zeta/complex.hpp"
#include "poisson_zeta/errors.hpp"
#include "poisson_zeta/real.hpp"
#include "poisson_zeta/s_parameter.hpp"

using namespace poisson_zeta;

TEST(Real, CarriesItsOwnPrecision) {
  const Real a(1L, 64);
  const Real b(3L, 200);
  EXPECT_EQ(a.precision(), 64);
  EXPECT_EQ((a / b).precision(), 200);
  EXPECT_EQ((b / a).precision(), 200);
}

TEST(Real, WideningKeepsThirdExact) {
  const Real third = Real(1L, 256) / 3;
  const Real back = third * 3;
  EXPECT_LT(abs(back - 1).to_double(), 1e-75);
}

TEST(Real, ParseAndRoundTrip) {
  const Real x = Real::parse("1.0823232337111381915160036965411679", 128);
  EXPECT_NEAR(x.to_double(), std::pow(std::numbers::pi, 4) / 90, 1e-15);
  const Real y = Real::parse(x.to_string(), 128);
  EXPECT_TRUE(x == y);
  EXPECT_THROW(Real::parse("abc", 128), std::invalid_argument);
  EXPECT_THROW(Real::parse("1.5x", 128), std::invalid_argument);
}

TEST(Real, MixedScalarOperators) {
  const Real x(2L, 128);
  EXPECT_EQ((1 - x).to_double(), -1.0);
  EXPECT_EQ((1 / x).to_double(), 0.5);
  EXPECT_EQ((x * 2.5).to_double(), 5.0);
  EXPECT_TRUE(x > 1.5);
  EXPECT_TRUE(x == 2.0);
}

TEST(Real, ElementaryFunctions) {
  const long prec = 128;
  EXPECT_NEAR(pi(prec).to_double(), std::numbers::pi, 1e-16);
  EXPECT_NEAR(pow(Real(2L, prec), Real(0.5, prec)).to_double(), std::sqrt(2.0), 1e-16);
  EXPECT_EQ(pow(Real(3L, prec), 4L).to_double(), 81.0);
  EXPECT_NEAR(exp(log(Real(7L, prec))).to_double(), 7.0, 1e-15);
}

TEST(Complex, ArithmeticMatchesStdComplex) {
  const Complex a(1.5, -2.0, 128);
  const Complex b(-0.25, 3.0, 128);
  const std::complex<double> sa(1.5, -2.0);
  const std::complex<double> sb(-0.25, 3.0);
  EXPECT_LT(std::abs((a * b).to_std() - sa * sb), 1e-15);
  EXPECT_LT(std::abs((a / b).to_std() - sa / sb), 1e-15);
  EXPECT_NEAR(abs(a).to_double(), std::abs(sa), 1e-15);
  EXPECT_EQ(conj(a).im.to_double(), 2.0);
}

TEST(Complex, PrincipalPowerOfPositiveBase) {
  const Complex e(-4.0, -1.0, 128);
  const std::complex<double> want = std::pow(std::complex<double>(3.0, 0.0), std::complex<double>(-4.0, -1.0));
  EXPECT_LT(std::abs(pow_positive(Real(3L, 128), e).to_std() - want), 1e-16);
  EXPECT_THROW(pow_positive(Real(-1L, 128), e), DomainError);
  EXPECT_THROW(pow_positive(Real(0L, 128), e), DomainError);
}

TEST(SParameter, EnforcesDomain) {
  EXPECT_NO_THROW(SParameter(4.0, 0.0));
  EXPECT_THROW(SParameter(3.999, 0.0), DomainError);
  EXPECT_THROW(SParameter(4.0, 0.0, 52), DomainError);
  EXPECT_THROW(SParameter(std::nan(""), 0.0), DomainError);
  EXPECT_THROW(SParameter(INFINITY, 0.0), DomainError);
  EXPECT_THROW(SParameter(4.0, 0.0).with_precision(10), DomainError);
}

TEST(SParameter, EvenIntegerDetection) {
  EXPECT_EQ(SParameter(4.0, 0.0).even_integer(), 4);
  EXPECT_EQ(SParameter(8.0, 0.0).even_integer(), 8);
  EXPECT_FALSE(SParameter(5.0, 0.0).even_integer().has_value());
  EXPECT_FALSE(SParameter(4.5, 0.0).even_integer().has_value());
  EXPECT_FALSE(SParameter(4.0, 1.0).even_integer().has_value());
}

TEST(SParameter, PrecisionPropagates) {
  const SParameter s(4.0, 1.0, 300);
  EXPECT_EQ(s.precision(), 300);
  EXPECT_EQ(s.with_precision(53).precision(), 53);
  EXPECT_NEAR(s.abs().to_double(), std::sqrt(17.0), 1e-15);
}
