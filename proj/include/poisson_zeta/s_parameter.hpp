#pragma once

#include <optional>

#include "poisson_zeta/complex.hpp"

namespace poisson_zeta {

/// The exponent s of the sum over n^(-s), restricted to Re(s) >= 4.
///
/// The working precision of every downstream computation is inherited from
/// the precision `s` was built with.
class SParameter {
 public:
  /// Throws DomainError when Re(s) < 4 or precision_bits < 53.
  SParameter(double re, double im, long precision_bits = kDefaultPrecisionBits);
  explicit SParameter(Complex value);

  [[nodiscard]] const Complex& value() const { return value_; }
  [[nodiscard]] const Real& re() const { return value_.re; }
  [[nodiscard]] const Real& im() const { return value_.im; }
  [[nodiscard]] const Real& abs() const { return abs_; }
  [[nodiscard]] long precision() const { return value_.precision(); }

  [[nodiscard]] bool is_real() const { return value_.im.is_zero(); }
  /// The value as an integer when s is a real even integer >= 2.
  [[nodiscard]] std::optional<long> even_integer() const;

  /// Copy at a different precision (re-validated).
  [[nodiscard]] SParameter with_precision(long precision_bits) const;

 private:
  Complex value_;
  Real abs_;
};

}  // namespace poisson_zeta
