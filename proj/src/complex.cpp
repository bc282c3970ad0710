#include "poisson_zeta/complex.hpp"

#include "poisson_zeta/errors.hpp"

namespace poisson_zeta {

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real real = re * rhs.re - im * rhs.im;
  Real imag = re * rhs.im + im * rhs.re;
  re = std::move(real);
  im = std::move(imag);
  return *this;
}

// Smith's algorithm keeps intermediate magnitudes near those of the operands.
Complex& Complex::operator/=(const Complex& rhs) {
  if (abs(rhs.im) <= abs(rhs.re)) {
    const Real ratio = rhs.im / rhs.re;
    const Real denom = rhs.re + rhs.im * ratio;
    Real real = (re + im * ratio) / denom;
    Real imag = (im - re * ratio) / denom;
    re = std::move(real);
    im = std::move(imag);
  } else {
    const Real ratio = rhs.re / rhs.im;
    const Real denom = rhs.re * ratio + rhs.im;
    Real real = (re * ratio + im) / denom;
    Real imag = (im * ratio - re) / denom;
    re = std::move(real);
    im = std::move(imag);
  }
  return *this;
}

Complex& Complex::operator+=(const Real& rhs) {
  re += rhs;
  return *this;
}

Complex& Complex::operator-=(const Real& rhs) {
  re -= rhs;
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

Real abs(const Complex& z) {
  Real out(0L, z.precision());
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return out;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real max_component(const Complex& z) { return max(abs(z.re), abs(z.im)); }

Complex pow_positive(const Real& base, const Complex& exponent) {
  if (base.sign() <= 0) throw DomainError("pow_positive: base must be > 0");
  const long prec = std::max(base.precision(), exponent.precision());
  Real modulus(0L, prec);
  mpfr_pow(modulus.get(), base.get(), exponent.re.get(), MPFR_RNDN);
  if (exponent.im.is_zero()) return Complex(modulus);
  Real angle = exponent.im * log(base);
  Real s(0L, prec);
  Real c(0L, prec);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {modulus * c, modulus * s};
}

}  // namespace poisson_zeta
