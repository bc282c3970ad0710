#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "poisson_zeta/complex.hpp"
#include "poisson_zeta/kernels.hpp"
#include "poisson_zeta/s_parameter.hpp"
#include "poisson_zeta/smoothing.hpp"

namespace poisson_zeta::oracle {

inline constexpr std::uint64_t kDefaultTruncationCap = 10'000'000;
/// Truncation used for reference values of zeta(s) when no closed form exists.
inline constexpr double kReferenceEps = 1e-10;

/// Smallest N with N^(1-sigma)/(sigma-1) <= eps. Requires sigma > 1, eps > 0.
std::uint64_t direct_zeta_terms(double sigma, double eps);

/// sum_{n=1}^{N} n^(-s) with N = direct_zeta_terms(Re(s), eps); within eps
/// of zeta(s). Accepts any Re(s) > 1 (this oracle alone may go below 4).
/// Throws ResourceError when N > cap, DomainError for Re(s) <= 1 or eps <= 0.
Complex direct_zeta(const Complex& s, double eps, std::uint64_t cap = kDefaultTruncationCap,
                    kernels::Mode mode = kernels::Mode::kParallel);
Complex direct_zeta(const SParameter& s, double eps, std::uint64_t cap = kDefaultTruncationCap,
                    kernels::Mode mode = kernels::Mode::kParallel);

/// zeta_even for real even integers, else direct_zeta at kReferenceEps.
Complex zeta_reference(const SParameter& s, std::uint64_t cap = kDefaultTruncationCap);

/// p(0) + p(r) + 2 sum_{l=1}^{r-1} p(l) - 2 * integral_0^r p.
Complex p_fourier_closed_form(const smoothing::SmoothingPolynomial& poly);

/// Partial sums over 0 < |n| <= N of int_0^r p(x) e^{+-2 pi i n x} dx for both
/// signs. Each integral comes from repeated integration by parts; +n and -n
/// are paired so the odd boundary terms cancel.
Complex truncated_P(const smoothing::SmoothingPolynomial& poly, std::uint64_t terms,
                    kernels::Mode mode = kernels::Mode::kParallel);

/// Transform of g at 0: 2 * integral_0^r p + 2 r^(1-s)/(s-1).
Complex f_at_zero(const smoothing::SplicedFunction& g);

/// Adaptive Gauss-Kronrod quadrature of g over [-cutoff, cutoff], split at +-r.
std::complex<double> f_at_zero_quadrature(const smoothing::SplicedFunction& g, double cutoff = 1e4);

/// Splice smoothness at x = +-r. For k = 0, 1, 2 and h = 1e-3, 1e-4, 1e-5,
/// second-order one-sided difference estimates of g^(k) are taken from each
/// side; returns the largest ratio gap(h/10) / gap(h). A C^2 splice gives
/// about 0.01, a jump in g^(k) about 1.
double splice_gap_ratio(const smoothing::SplicedFunction& g);

struct RemainderExtraction {
  Complex remainder;  // R = p(0) + 2 zeta_ref - f(0) - P
  Real magnitude;
  Real bound;
  bool pass = false;
};

RemainderExtraction extract_R(const smoothing::SplicedFunction& g, const Complex& zeta_ref);
RemainderExtraction extract_R(const SParameter& s, int r, const Complex& zeta_ref);

struct HalfSum {
  Real re;
  Real im;
};

/// Symmetric partial sum over |n| <= N of the Fourier coefficients of x^k on
/// [0, 1]. Requires 1 <= k <= 5, N >= 1.
HalfSum half_sum_check(int k, std::uint64_t terms, long precision_bits = kDefaultPrecisionBits,
                       kernels::Mode mode = kernels::Mode::kParallel);

// Validation reports ---------------------------------------------------------

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Check make_check(std::string name, double residual, double tolerance);

enum class Suite { kAll, kIdentity, kHalfSum, kBernoulli, kSmoothing };

/// Throws DomainError for an unknown name.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);

struct ValidationConfig {
  Suite suite = Suite::kAll;
  std::uint64_t truncation_cap = kDefaultTruncationCap;
  std::uint64_t seed = 0;
  std::uint64_t fourier_terms_coarse = 1'000;
  std::uint64_t fourier_terms_fine = 10'000;
  std::uint64_t half_sum_terms = 10'000;
  std::uint64_t zeta_even_terms = 100'000;
  kernels::Mode mode = kernels::Mode::kParallel;
};

struct ValidationContext {
  double s_re = 0.0;
  double s_im = 0.0;
  int r = 0;
  long precision_bits = 0;
  ValidationConfig config;
};

struct ValidationReport {
  std::vector<Check> checks;  // sorted by name
  std::vector<std::string> skipped;
  ValidationContext context;

  [[nodiscard]] bool all_passed() const;
};

/// Runs the selected suite at (s, r). Individual failures land in the report;
/// DomainError / ConditioningError / ResourceError propagate.
ValidationReport run_validation(const SParameter& s, int r, const ValidationConfig& config = {});

}  // namespace poisson_zeta::oracle
