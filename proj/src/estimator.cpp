#include "poisson_zeta/estimator.hpp"

#include <string>

#include "poisson_zeta/bernoulli.hpp"
#include "poisson_zeta/errors.hpp"

namespace poisson_zeta::estimator {

namespace {

void check_order(int r, int minimum) {
  if (r < minimum) {
    throw DomainError("order r must be >= " + std::to_string(minimum) + ", got " + std::to_string(r));
  }
}

}  // namespace

Real remainder_bound(const SParameter& s, int r) {
  check_order(r, 1);
  const long prec = s.precision();
  const Real sigma_plus_one = s.re() + 1;
  const Real denominator = 3 * sigma_plus_one * pow(Real(static_cast<long>(r), prec), sigma_plus_one);
  return 2 * s.abs() * s.abs() / denominator;
}

Complex tail_estimate(const SParameter& s, int r) {
  check_order(r, 1);
  const long prec = s.precision();
  const Real rr(static_cast<long>(r), prec);
  const Complex s_minus_one = s.value() - Real(1L, prec);
  const Complex integral = pow_positive(rr, -s_minus_one) / s_minus_one;
  return integral + pow_positive(rr, -s.value()) / 2;
}

Complex head_sum_bernoulli(const smoothing::SmoothingPolynomial& poly) {
  check_order(poly.r(), 2);
  const long prec = poly.precision();
  Complex total(Real(0L, prec));
  const auto& a = poly.coefficients();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const mpq_class weight = bernoulli::power_sum_from_one(static_cast<int>(j), poly.r());
    total += a[j] * Real(weight, prec);
  }
  return total;
}

ZetaEstimate zeta_estimate(const SParameter& s, int r) {
  check_order(r, 1);
  const smoothing::SmoothingPolynomial poly = smoothing::build_polynomial(s, r);
  Complex head = (r >= 2) ? head_sum_bernoulli(poly) : Complex(Real(0L, s.precision()));
  Complex tail = tail_estimate(s, r);
  Complex value = head + tail;
  return ZetaEstimate{s, r, std::move(head), std::move(tail), std::move(value), remainder_bound(s, r) / 2,
                      poly.diagnostics()};
}

Real crossover_radius(const SParameter& s) {
  return s.abs() * sqrt((s.re() - 1) / (3 * (s.re() + 1)));
}

Bracket naive_bracket(const SParameter& s, int r) {
  check_order(r, 2);
  const long prec = s.precision();
  const Real exponent = s.re() - 1;
  const Real lower = 1 / (exponent * pow(Real(static_cast<long>(r), prec), exponent));
  const Real upper = 1 / (exponent * pow(Real(static_cast<long>(r - 1), prec), exponent));
  return {lower, upper};
}

}  // namespace poisson_zeta::estimator
