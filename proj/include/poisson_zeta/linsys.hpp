#pragma once

#include <cstddef>
#include <vector>

#include "poisson_zeta/complex.hpp"
#include "poisson_zeta/s_parameter.hpp"

namespace poisson_zeta::linsys {

/// Dense square system `matrix * a = rhs` defining the smoothing polynomial.
///
/// Unknowns are the coefficients a_j of x^(2j), j = 0..r+1. Rows 0..r-1
/// interpolate n^(-s) at n = 1..r; row r matches the first derivative of
/// x^(-s) at x = r; row r+1 matches the second derivative.
///
/// `matrix` and `rhs` hold the unscaled system. The solver works on
/// diag(row_scale) * matrix * diag(column_scale); the default scales
/// substitute t = x / r so every entry of the scaled matrix is bounded by
/// 2(r+1)(2r+1).
struct SystemInstance {
  int r = 0;
  std::size_t size = 0;
  long precision_bits = kDefaultPrecisionBits;
  std::vector<Real> matrix;  // row-major, size * size
  std::vector<Complex> rhs;
  std::vector<Real> column_scale;
  std::vector<Real> row_scale;

  [[nodiscard]] const Real& at(std::size_t row, std::size_t col) const { return matrix[row * size + col]; }
  [[nodiscard]] Real& at(std::size_t row, std::size_t col) { return matrix[row * size + col]; }
};

/// Extra significand bits carried through elimination and the returned
/// coefficients. The scaled coefficients grow to ~1e10 by r = 12, so
/// rounding them to the requested width alone would already break the
/// residual contract.
inline constexpr long kGuardBits = 64;

struct SolveDiagnostics {
  double condition_estimate = 0.0;
  long precision_bits = 0;           // requested working precision
  long internal_precision_bits = 0;  // precision_bits + kGuardBits
  /// max_k |(matrix * a - rhs)_k| on the unscaled system.
  double residual_norm = 0.0;
};

struct SolveResult {
  std::vector<Complex> coefficients;  // coefficient of x^(2j)
  SolveDiagnostics diagnostics;
};

enum class Scaling { kNone, kDefault };

/// Throws DomainError for r < 1 (Re(s) >= 4 is enforced by SParameter).
SystemInstance build_system(const SParameter& s, int r);

/// Identity scaling on a caller-supplied system (used for hand-built systems).
SystemInstance make_unscaled(std::vector<Real> matrix, std::vector<Complex> rhs, long precision_bits);

/// Gaussian elimination with partial pivoting on the scaled system, carried
/// out at precision_bits + kGuardBits.
///
/// Pivot ties are broken by comparing the candidate rows' remaining entries,
/// so the result does not depend on the order in which rows are stored.
/// Throws ConditioningError when a pivot falls below
/// 2^(-precision/2) * (largest scaled entry), or when the residual exceeds
/// residual_tolerance(precision).
SolveResult solve_dense(const SystemInstance& system);

/// Infinity-norm condition number ||M|| * ||M^-1|| of the scaled matrix
/// (or of the raw matrix for Scaling::kNone), with M^-1 formed explicitly.
double condition_estimate(const SystemInstance& system, Scaling scaling = Scaling::kDefault);

/// 10^(-precision_bits / 4).
double residual_tolerance(long precision_bits);

}  // namespace poisson_zeta::linsys
