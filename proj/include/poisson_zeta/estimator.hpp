#pragma once

#include "poisson_zeta/complex.hpp"
#include "poisson_zeta/linsys.hpp"
#include "poisson_zeta/s_parameter.hpp"
#include "poisson_zeta/smoothing.hpp"

namespace poisson_zeta::estimator {

/// Estimate of sum_{n>=1} n^(-s) split at r.
///
/// head = sum_{n=1}^{r-1} n^(-s) through Bernoulli polynomials,
/// tail = 1/((s-1) r^(s-1)) + r^(-s)/2, and |value - zeta(s)| <= bound.
struct ZetaEstimate {
  SParameter s;
  int r = 0;
  Complex head;
  Complex tail;
  Complex value;
  Real bound;
  linsys::SolveDiagnostics diagnostics;
};

/// 2|s|^2 / (3 (Re(s)+1) r^(Re(s)+1)). Throws DomainError for r < 1.
Real remainder_bound(const SParameter& s, int r);

/// Integral of x^(-s) over [r, inf) plus the half endpoint term r^(-s)/2.
Complex tail_estimate(const SParameter& s, int r);

/// sum_{n=1}^{r-1} n^(-s) = sum_j a_j (B_{2j+1}(r) - B_{2j+1}(1)) / (2j+1).
/// Throws DomainError for r < 2.
Complex head_sum_bernoulli(const smoothing::SmoothingPolynomial& poly);

/// r = 1 is allowed and yields an empty head.
ZetaEstimate zeta_estimate(const SParameter& s, int r);

/// |s| sqrt((Re(s)-1) / (3 (Re(s)+1))): for r at or above this radius the
/// estimate's bound is no larger than the lower integral bracket of the tail.
Real crossover_radius(const SParameter& s);

struct Bracket {
  Real lower;
  Real upper;
};

/// Integral bracket of the tail modulus:
/// [1/((Re(s)-1) r^(Re(s)-1)), 1/((Re(s)-1) (r-1)^(Re(s)-1))].
/// For real s the tail itself lies inside. Throws DomainError for r < 2.
Bracket naive_bracket(const SParameter& s, int r);

}  // namespace poisson_zeta::estimator
