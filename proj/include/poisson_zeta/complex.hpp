#pragma once

#include <complex>
#include <concepts>

#include "poisson_zeta/real.hpp"

namespace poisson_zeta {

/// Cartesian complex number over `Real`.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit Complex(const Real& real) : re(real), im(0L, real.precision()) {}
  Complex(double real, double imag, long precision_bits)
      : re(real, precision_bits), im(imag, precision_bits) {}

  [[nodiscard]] long precision() const { return std::max(re.precision(), im.precision()); }
  [[nodiscard]] std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator+=(const Real& rhs);
  Complex& operator-=(const Real& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);

  template <std::integral I>
  Complex& operator*=(I rhs) {
    re *= rhs;
    im *= rhs;
    return *this;
  }
  template <std::integral I>
  Complex& operator/=(I rhs) {
    re /= rhs;
    im /= rhs;
    return *this;
  }
  template <std::integral I>
  Complex& operator+=(I rhs) {
    re += rhs;
    return *this;
  }
  template <std::integral I>
  Complex& operator-=(I rhs) {
    re -= rhs;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator+(Complex a, const Real& b) { return a += b; }
inline Complex operator-(Complex a, const Real& b) { return a -= b; }
inline Complex operator*(Complex a, const Real& b) { return a *= b; }
inline Complex operator/(Complex a, const Real& b) { return a /= b; }
inline Complex operator*(const Real& a, Complex b) { return b *= a; }
inline Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }

template <std::integral I>
Complex operator*(Complex a, I b) { return a *= b; }
template <std::integral I>
Complex operator*(I a, Complex b) { return b *= a; }
template <std::integral I>
Complex operator/(Complex a, I b) { return a /= b; }
template <std::integral I>
Complex operator+(Complex a, I b) { return a += b; }
template <std::integral I>
Complex operator-(Complex a, I b) { return a -= b; }

/// Modulus, computed with hypot to avoid spurious overflow.
Real abs(const Complex& z);
Complex conj(const Complex& z);
/// Largest of |re| and |im|.
Real max_component(const Complex& z);

/// base^exponent for a strictly positive real base, using the real
/// logarithm: base^s = base^Re(s) * (cos(Im(s) ln base) + i sin(Im(s) ln base)).
/// No branch cut is involved. Throws DomainError for base <= 0.
Complex pow_positive(const Real& base, const Complex& exponent);

}  // namespace poisson_zeta
