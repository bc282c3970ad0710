#pragma once

#include <vector>

#include "poisson_zeta/complex.hpp"
#include "poisson_zeta/linsys.hpp"
#include "poisson_zeta/s_parameter.hpp"

namespace poisson_zeta::smoothing {

/// Relative tolerance to which the smoothing polynomial matches n^(-s) at the
/// integer nodes and the tail's value, slope and curvature at x = +-r.
inline constexpr double kMatchingTolerance = 1e-10;

/// h(x) = x^(-s) for x >= r, extended to x <= -r by h(-x) = h(x).
class TailFunction {
 public:
  /// Throws DomainError for r < 1.
  TailFunction(SParameter s, int r);

  [[nodiscard]] const SParameter& s() const { return s_; }
  [[nodiscard]] int r() const { return r_; }

 private:
  SParameter s_;
  int r_;
};

/// Even polynomial p(x) = sum_j a_j x^(2j), j = 0..r+1 (degree 2r+2).
///
/// Built by `build_polynomial` it interpolates n^(-s) at n = 1..r and agrees
/// with the tail to second order at x = +-r.
class SmoothingPolynomial {
 public:
  SmoothingPolynomial(SParameter s, int r, std::vector<Complex> coefficients,
                      linsys::SolveDiagnostics diagnostics = {});
  /// All-zero coefficients; handy as a neutral element in tests.
  static SmoothingPolynomial zero(const SParameter& s, int r);

  [[nodiscard]] const SParameter& s() const { return s_; }
  [[nodiscard]] int r() const { return r_; }
  [[nodiscard]] int degree() const { return 2 * r_ + 2; }
  [[nodiscard]] const std::vector<Complex>& coefficients() const { return coefficients_; }
  [[nodiscard]] const linsys::SolveDiagnostics& diagnostics() const { return diagnostics_; }
  /// Widest precision among the coefficients and s.
  [[nodiscard]] long precision() const;

 private:
  SParameter s_;
  int r_;
  std::vector<Complex> coefficients_;
  linsys::SolveDiagnostics diagnostics_;
};

/// g = p on [-r, r], h outside.
class SplicedFunction {
 public:
  /// Throws DomainError when the two pieces disagree on s or r.
  SplicedFunction(SmoothingPolynomial poly, TailFunction tail);

  [[nodiscard]] const SmoothingPolynomial& poly() const { return poly_; }
  [[nodiscard]] const TailFunction& tail() const { return tail_; }
  [[nodiscard]] int r() const { return tail_.r(); }

 private:
  SmoothingPolynomial poly_;
  TailFunction tail_;
};

/// k-th derivative (k = 0, 1, 2) of h at x. Throws DomainError for |x| < r
/// or k outside 0..2.
Complex eval_h(const TailFunction& tail, const Real& x, int k = 0);
Complex eval_h(const TailFunction& tail, double x, int k = 0);

/// Solves the linear system for (s, r). Propagates ConditioningError.
SmoothingPolynomial build_polynomial(const SParameter& s, int r);

/// k-th derivative (k = 0, 1, 2) of p at x, Horner in x^2.
Complex eval_p(const SmoothingPolynomial& poly, const Real& x, int k = 0);
Complex eval_p(const SmoothingPolynomial& poly, double x, int k = 0);

/// Integral of p over [0, r], term by term.
Complex integral_p(const SmoothingPolynomial& poly);

SplicedFunction build_spliced(const SParameter& s, int r);

/// k-th derivative of g. At |x| = r the tail branch answers.
Complex eval_g(const SplicedFunction& g, const Real& x, int k = 0);
Complex eval_g(const SplicedFunction& g, double x, int k = 0);

}  // namespace poisson_zeta::smoothing
