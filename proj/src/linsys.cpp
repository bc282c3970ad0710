#include "poisson_zeta/linsys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "poisson_zeta/errors.hpp"

namespace poisson_zeta::linsys {

namespace {

// Exact: the precision is widened to the bit length of the integer when needed.
Real exact_integer(const mpz_class& value, long prec) {
  const long bits = static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 2));
  return Real(value, std::max(prec, bits));
}

mpz_class integer_power(unsigned long base, unsigned long exponent) {
  mpz_class value;
  mpz_ui_pow_ui(value.get_mpz_t(), base, exponent);
  return value;
}

Real widened(const Real& v, long prec) {
  Real out(0L, std::max(prec, v.precision()));
  mpfr_set(out.get(), v.get(), MPFR_RNDN);
  return out;
}

Real tolerance_as_real(long precision_bits) {
  // 10^(-bits/4), evaluated at a precision wide enough to hold it exactly enough.
  Real exponent(-static_cast<double>(precision_bits) / 4.0, 64);
  Real ten(10L, 64);
  return pow(ten, exponent);
}

struct ScaledSystem {
  std::size_t n = 0;
  std::vector<Real> m;  // row-major
  std::vector<Complex> b;
};

ScaledSystem scaled_copy(const SystemInstance& sys, Scaling scaling, long prec) {
  ScaledSystem out;
  out.n = sys.size;
  out.m.reserve(sys.matrix.size());
  for (const Real& v : sys.matrix) out.m.push_back(widened(v, prec));
  out.b.reserve(sys.rhs.size());
  for (const Complex& v : sys.rhs) out.b.emplace_back(widened(v.re, prec), widened(v.im, prec));
  if (scaling == Scaling::kNone) return out;
  for (std::size_t i = 0; i < out.n; ++i) {
    for (std::size_t j = 0; j < out.n; ++j) {
      Real& entry = out.m[i * out.n + j];
      entry *= sys.row_scale[i];
      entry *= sys.column_scale[j];
    }
    out.b[i] *= sys.row_scale[i];
  }
  return out;
}

// True when row `a` should be preferred over row `b` as pivot for column
// `col`: larger magnitude wins, ties go to the lexicographically larger
// tail of magnitudes, then of signed values.
bool better_pivot(const std::vector<Real>& m, std::size_t n, std::size_t a, std::size_t b, std::size_t col) {
  for (std::size_t j = col; j < n; ++j) {
    const Real ma = abs(m[a * n + j]);
    const Real mb = abs(m[b * n + j]);
    if (ma != mb) return ma > mb;
  }
  for (std::size_t j = col; j < n; ++j) {
    if (m[a * n + j] != m[b * n + j]) return m[a * n + j] > m[b * n + j];
  }
  return false;
}

void swap_rows(std::vector<Real>& m, std::size_t n, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < n; ++j) std::swap(m[a * n + j], m[b * n + j]);
}

Real max_abs_entry(const std::vector<Real>& m, long prec) {
  Real largest(0L, prec);
  for (const Real& v : m) largest = max(largest, abs(v));
  return largest;
}

Real row_sum_norm(const std::vector<Real>& m, std::size_t n, long prec) {
  Real norm(0L, prec);
  for (std::size_t i = 0; i < n; ++i) {
    Real row(0L, prec);
    for (std::size_t j = 0; j < n; ++j) row += abs(m[i * n + j]);
    norm = max(norm, row);
  }
  return norm;
}

}  // namespace

double residual_tolerance(long precision_bits) { return tolerance_as_real(precision_bits).to_double(); }

SystemInstance build_system(const SParameter& s, int r) {
  if (r < 1) throw DomainError("order r must be >= 1, got " + std::to_string(r));
  const long prec = s.precision();
  const std::size_t n = static_cast<std::size_t>(r) + 2;

  SystemInstance sys;
  sys.r = r;
  sys.size = n;
  sys.precision_bits = prec;
  sys.matrix.assign(n * n, Real(0L, prec));
  sys.rhs.assign(n, Complex(Real(0L, prec)));
  sys.column_scale.reserve(n);
  sys.row_scale.assign(n, Real(1L, prec));

  const unsigned long ur = static_cast<unsigned long>(r);
  for (std::size_t k = 1; k <= ur; ++k) {
    for (std::size_t j = 0; j < n; ++j) sys.at(k - 1, j) = exact_integer(integer_power(k, 2 * j), prec);
  }
  for (std::size_t j = 1; j < n; ++j) {
    sys.at(ur, j) = exact_integer(integer_power(ur, 2 * j - 1) * static_cast<unsigned long>(2 * j), prec);
    sys.at(ur + 1, j) =
        exact_integer(integer_power(ur, 2 * j - 2) * static_cast<unsigned long>(2 * j * (2 * j - 1)), prec);
  }

  const Complex minus_s = -s.value();
  for (std::size_t k = 1; k <= ur; ++k) sys.rhs[k - 1] = pow_positive(Real(static_cast<long>(k), prec), minus_s);
  const Real rr(static_cast<long>(r), prec);
  sys.rhs[ur] = minus_s * pow_positive(rr, minus_s - Real(1L, prec));
  sys.rhs[ur + 1] = s.value() * (s.value() + 1) * pow_positive(rr, minus_s - Real(2L, prec));

  // t = x / r: a_j = r^(-2j) * c_j; derivative rows pick up r and r^2.
  for (std::size_t j = 0; j < n; ++j) sys.column_scale.push_back(pow(rr, -2L * static_cast<long>(j)));
  sys.row_scale[ur] = rr;
  sys.row_scale[ur + 1] = rr * rr;
  return sys;
}

SystemInstance make_unscaled(std::vector<Real> matrix, std::vector<Complex> rhs, long precision_bits) {
  const std::size_t n = rhs.size();
  if (matrix.size() != n * n || n == 0) throw DomainError("matrix must be square and match rhs length");
  SystemInstance sys;
  sys.r = static_cast<int>(n) - 2;
  sys.size = n;
  sys.precision_bits = precision_bits;
  sys.matrix = std::move(matrix);
  sys.rhs = std::move(rhs);
  sys.column_scale.assign(n, Real(1L, precision_bits));
  sys.row_scale.assign(n, Real(1L, precision_bits));
  return sys;
}

SolveResult solve_dense(const SystemInstance& system) {
  const long prec = system.precision_bits + kGuardBits;
  ScaledSystem work = scaled_copy(system, Scaling::kDefault, prec);
  const std::size_t n = work.n;
  auto& m = work.m;
  auto& b = work.b;

  const Real largest = max_abs_entry(m, prec);
  Real floor = largest;
  mpfr_mul_2si(floor.get(), floor.get(), -system.precision_bits / 2, MPFR_RNDN);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (better_pivot(m, n, row, pivot, col)) pivot = row;
    }
    if (abs(m[pivot * n + col]) < floor) {
      throw ConditioningError("pivot " + abs(m[pivot * n + col]).to_string(6) + " in column " +
                              std::to_string(col) + " is below the precision floor " + floor.to_string(6) +
                              " at " + std::to_string(system.precision_bits) + " bits");
    }
    swap_rows(m, n, pivot, col);
    std::swap(b[pivot], b[col]);
    const Real& p = m[col * n + col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row * n + col].is_zero()) continue;
      const Real factor = m[row * n + col] / p;
      for (std::size_t j = col; j < n; ++j) m[row * n + j] -= factor * m[col * n + j];
      b[row] -= b[col] * factor;
    }
  }

  std::vector<Complex> y(n, Complex(Real(0L, prec)));
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= y[j] * m[i * n + j];
    y[i] = acc / m[i * n + i];
  }

  SolveResult out;
  out.coefficients.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.coefficients.push_back(y[j] * widened(system.column_scale[j], prec));

  Real residual(0L, prec);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = -system.rhs[i];
    for (std::size_t j = 0; j < n; ++j) acc += out.coefficients[j] * system.at(i, j);
    residual = max(residual, abs(acc));
  }
  const Real tolerance = tolerance_as_real(system.precision_bits);
  if (!residual.is_finite() || residual > tolerance) {
    throw ConditioningError("residual " + residual.to_string(6) + " exceeds the contract " + tolerance.to_string(6) +
                            " at " + std::to_string(system.precision_bits) + " bits");
  }

  out.diagnostics.precision_bits = system.precision_bits;
  out.diagnostics.internal_precision_bits = prec;
  out.diagnostics.residual_norm = residual.to_double();
  out.diagnostics.condition_estimate = condition_estimate(system);
  return out;
}

double condition_estimate(const SystemInstance& system, Scaling scaling) {
  const long prec = system.precision_bits + kGuardBits;
  ScaledSystem work = scaled_copy(system, scaling, prec);
  const std::size_t n = work.n;
  std::vector<Real>& a = work.m;
  const Real norm = row_sum_norm(a, n, prec);

  std::vector<Real> inv(n * n, Real(0L, prec));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = Real(1L, prec);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (abs(a[row * n + col]) > abs(a[pivot * n + col])) pivot = row;
    }
    if (a[pivot * n + col].is_zero()) return std::numeric_limits<double>::infinity();
    swap_rows(a, n, pivot, col);
    swap_rows(inv, n, pivot, col);
    const Real p = a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row * n + col].is_zero()) continue;
      const Real factor = a[row * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row * n + j] -= factor * a[col * n + j];
        inv[row * n + j] -= factor * inv[col * n + j];
      }
    }
  }
  return (norm * row_sum_norm(inv, n, prec)).to_double();
}

}  // namespace poisson_zeta::linsys
