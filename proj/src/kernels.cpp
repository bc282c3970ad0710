#include "poisson_zeta/kernels.hpp"

namespace poisson_zeta::kernels {

Complex inverse_power_sum(const Complex& s, std::uint64_t first, std::uint64_t last, Mode mode) {
  const long prec = s.precision();
  if (s.im.is_zero()) {
    const Real exponent = -s.re;
    auto term = [&exponent, prec](std::uint64_t n) {
      Real value(0L, prec);
      mpfr_ui_pow(value.get(), static_cast<unsigned long>(n), exponent.get(), MPFR_RNDN);
      return Complex(value);
    };
    return sum(mode, first, last, term, prec);
  }
  const Complex exponent = -s;
  auto term = [&exponent, prec](std::uint64_t n) {
    return pow_positive(Real(static_cast<double>(n), prec), exponent);
  };
  return sum(mode, first, last, term, prec);
}

Complex even_power_series_sum(std::span<const Complex> weights, std::uint64_t count, Mode mode) {
  long prec = kMinPrecisionBits;
  for (const Complex& w : weights) prec = std::max(prec, w.precision());
  // Horner in 1/n^2: n^-2 (w_1 + n^-2 (w_2 + ...)).
  auto term = [weights, prec](std::uint64_t n) {
    Real inv_sq(1L, prec);
    inv_sq /= static_cast<double>(n);
    inv_sq /= static_cast<double>(n);
    Complex acc(Real(0L, prec));
    for (std::size_t m = weights.size(); m-- > 0;) {
      acc += weights[m];
      acc *= inv_sq;
    }
    return acc;
  };
  return sum(mode, 1, count, term, prec);
}

}  // namespace poisson_zeta::kernels
