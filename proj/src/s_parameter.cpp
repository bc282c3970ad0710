#include "poisson_zeta/s_parameter.hpp"

#include <cmath>
#include <string>

#include "poisson_zeta/errors.hpp"

namespace poisson_zeta {

SParameter::SParameter(double re, double im, long precision_bits)
    : SParameter(Complex(re, im, std::max(precision_bits, kMinPrecisionBits))) {
  if (precision_bits < kMinPrecisionBits) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  }
}

SParameter::SParameter(Complex value) : value_(std::move(value)) {
  if (value_.precision() < kMinPrecisionBits) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  }
  if (!value_.re.is_finite() || !value_.im.is_finite()) throw DomainError("s must be finite");
  if (value_.re < 4.0) throw DomainError("Re(s) must be >= 4, got " + value_.re.to_string(17));
  abs_ = poisson_zeta::abs(value_);
}

std::optional<long> SParameter::even_integer() const {
  if (!is_real() || mpfr_integer_p(value_.re.get()) == 0) return std::nullopt;
  const long n = mpfr_get_si(value_.re.get(), MPFR_RNDN);
  if (n % 2 != 0) return std::nullopt;
  return n;
}

SParameter SParameter::with_precision(long precision_bits) const {
  if (precision_bits < kMinPrecisionBits) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  }
  Complex copy = value_;
  mpfr_prec_round(copy.re.get(), precision_bits, MPFR_RNDN);
  mpfr_prec_round(copy.im.get(), precision_bits, MPFR_RNDN);
  return SParameter(std::move(copy));
}

}  // namespace poisson_zeta
