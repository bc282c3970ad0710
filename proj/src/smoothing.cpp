#include "poisson_zeta/smoothing.hpp"

#include <string>

#include "poisson_zeta/errors.hpp"

namespace poisson_zeta::smoothing {

namespace {

void check_order(int k) {
  if (k < 0 || k > 2) throw DomainError("derivative order must be 0, 1 or 2, got " + std::to_string(k));
}

Complex zero_like(long prec) { return Complex(Real(0L, prec)); }

}  // namespace

TailFunction::TailFunction(SParameter s, int r) : s_(std::move(s)), r_(r) {
  if (r_ < 1) throw DomainError("order r must be >= 1, got " + std::to_string(r_));
}

SmoothingPolynomial::SmoothingPolynomial(SParameter s, int r, std::vector<Complex> coefficients,
                                         linsys::SolveDiagnostics diagnostics)
    : s_(std::move(s)), r_(r), coefficients_(std::move(coefficients)), diagnostics_(diagnostics) {
  if (r_ < 1) throw DomainError("order r must be >= 1, got " + std::to_string(r_));
  if (coefficients_.size() != static_cast<std::size_t>(r_) + 2) {
    throw DomainError("expected " + std::to_string(r_ + 2) + " coefficients, got " +
                      std::to_string(coefficients_.size()));
  }
}

SmoothingPolynomial SmoothingPolynomial::zero(const SParameter& s, int r) {
  if (r < 1) throw DomainError("order r must be >= 1, got " + std::to_string(r));
  std::vector<Complex> coefficients(static_cast<std::size_t>(r) + 2, zero_like(s.precision()));
  return SmoothingPolynomial(s, r, std::move(coefficients));
}

long SmoothingPolynomial::precision() const {
  long prec = s_.precision();
  for (const Complex& c : coefficients_) prec = std::max(prec, c.precision());
  return prec;
}

SplicedFunction::SplicedFunction(SmoothingPolynomial poly, TailFunction tail)
    : poly_(std::move(poly)), tail_(std::move(tail)) {
  if (poly_.r() != tail_.r() || poly_.s().value().re != tail_.s().value().re ||
      poly_.s().value().im != tail_.s().value().im) {
    throw DomainError("polynomial and tail were built for different (s, r)");
  }
}

Complex eval_h(const TailFunction& tail, const Real& x, int k) {
  check_order(k);
  const Real ax = abs(x);
  if (ax < static_cast<double>(tail.r())) {
    throw DomainError("h is only defined for |x| >= r = " + std::to_string(tail.r()));
  }
  const Complex& s = tail.s().value();
  Complex value = pow_positive(ax, -s - Real(static_cast<long>(k), s.precision()));
  if (k >= 1) value *= -s;
  if (k == 2) value *= -(s + 1);
  // h^(k)(-x) = (-1)^k h^(k)(x).
  if (k == 1 && x.sign() < 0) value = -value;
  return value;
}

Complex eval_h(const TailFunction& tail, double x, int k) {
  return eval_h(tail, Real(x, tail.s().precision()), k);
}

SmoothingPolynomial build_polynomial(const SParameter& s, int r) {
  const linsys::SystemInstance system = linsys::build_system(s, r);
  linsys::SolveResult solved = linsys::solve_dense(system);
  return SmoothingPolynomial(s, r, std::move(solved.coefficients), solved.diagnostics);
}

Complex eval_p(const SmoothingPolynomial& poly, const Real& x, int k) {
  check_order(k);
  const auto& a = poly.coefficients();
  const long prec = std::max(poly.precision(), x.precision());
  Real xx(0L, prec);
  mpfr_set(xx.get(), x.get(), MPFR_RNDN);
  const Real u = xx * xx;

  Complex acc = zero_like(prec);
  const std::size_t first = (k == 0) ? 0 : 1;
  for (std::size_t j = a.size(); j-- > first;) {
    acc *= u;
    const long jj = static_cast<long>(j);
    switch (k) {
      case 0:
        acc += a[j];
        break;
      case 1:
        acc += a[j] * (2 * jj);
        break;
      default:
        acc += a[j] * (2 * jj * (2 * jj - 1));
        break;
    }
  }
  if (k == 1) acc *= xx;
  return acc;
}

Complex eval_p(const SmoothingPolynomial& poly, double x, int k) {
  return eval_p(poly, Real(x, poly.precision()), k);
}

Complex integral_p(const SmoothingPolynomial& poly) {
  const long prec = poly.precision();
  const Real r(static_cast<long>(poly.r()), prec);
  const Real r2 = r * r;
  Complex total = zero_like(prec);
  Real power = r;  // r^(2j+1)
  for (std::size_t j = 0; j < poly.coefficients().size(); ++j) {
    total += poly.coefficients()[j] * (power / static_cast<long>(2 * j + 1));
    power *= r2;
  }
  return total;
}

SplicedFunction build_spliced(const SParameter& s, int r) {
  return SplicedFunction(build_polynomial(s, r), TailFunction(s, r));
}

Complex eval_g(const SplicedFunction& g, const Real& x, int k) {
  if (abs(x) >= static_cast<double>(g.r())) return eval_h(g.tail(), x, k);
  return eval_p(g.poly(), x, k);
}

Complex eval_g(const SplicedFunction& g, double x, int k) {
  return eval_g(g, Real(x, g.poly().precision()), k);
}

}  // namespace poisson_zeta::smoothing
