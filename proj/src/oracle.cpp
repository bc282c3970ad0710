#include "poisson_zeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "poisson_zeta/bernoulli.hpp"
#include "poisson_zeta/errors.hpp"
#include "poisson_zeta/estimator.hpp"

namespace poisson_zeta::oracle {

namespace {

using smoothing::SmoothingPolynomial;
using smoothing::SplicedFunction;

Complex zero_like(long prec) { return Complex(Real(0L, prec)); }

// k-th derivative of p at x for any k, from the monomial form sum_j a_j x^(2j).
Complex derivative_any_order(const SmoothingPolynomial& poly, const Real& x, int k) {
  const long prec = std::max(poly.precision(), x.precision());
  Complex acc = zero_like(prec);
  const auto& a = poly.coefficients();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const long power = 2 * static_cast<long>(j);
    if (power < k) continue;
    Real falling(1L, prec);
    for (long i = 0; i < k; ++i) falling *= power - i;
    acc += a[j] * (falling * pow(x, power - k));
  }
  return acc;
}

double relative_gap(const Complex& got, const Complex& want) {
  const Real scale = abs(want);
  const Real diff = abs(got - want);
  return scale.is_zero() ? diff.to_double() : (diff / scale).to_double();
}

}  // namespace

// direct summation ------------------------------------------------------------

std::uint64_t direct_zeta_terms(double sigma, double eps) {
  if (!(sigma > 1.0) || !std::isfinite(sigma)) throw DomainError("direct summation needs Re(s) > 1");
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  const double estimate = std::ceil(std::pow(1.0 / (eps * (sigma - 1.0)), 1.0 / (sigma - 1.0)));
  if (!(estimate < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
  auto tail = [sigma](double n) { return std::pow(n, 1.0 - sigma) / (sigma - 1.0); };
  std::uint64_t n = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(estimate));
  while (n > 1 && tail(static_cast<double>(n - 1)) <= eps) --n;
  while (tail(static_cast<double>(n)) > eps) ++n;
  return n;
}

Complex direct_zeta(const Complex& s, double eps, std::uint64_t cap, kernels::Mode mode) {
  const std::uint64_t terms = direct_zeta_terms(s.re.to_double(), eps);
  if (terms > cap) {
    throw ResourceError("direct summation needs " + std::to_string(terms) + " terms, cap is " +
                        std::to_string(cap));
  }
  return kernels::inverse_power_sum(s, 1, terms, mode);
}

Complex direct_zeta(const SParameter& s, double eps, std::uint64_t cap, kernels::Mode mode) {
  return direct_zeta(s.value(), eps, cap, mode);
}

Complex zeta_reference(const SParameter& s, std::uint64_t cap) {
  if (const auto even = s.even_integer()) return Complex(bernoulli::zeta_even(*even, s.precision()));
  return direct_zeta(s, kReferenceEps, cap);
}

// Fourier side ----------------------------------------------------------------

Complex p_fourier_closed_form(const SmoothingPolynomial& poly) {
  const long prec = poly.precision();
  Complex total = smoothing::eval_p(poly, Real(0L, prec)) +
                  smoothing::eval_p(poly, Real(static_cast<long>(poly.r()), prec));
  for (int l = 1; l < poly.r(); ++l) total += 2 * smoothing::eval_p(poly, Real(static_cast<long>(l), prec));
  total -= 2 * smoothing::integral_p(poly);
  return total;
}

Complex truncated_P(const SmoothingPolynomial& poly, std::uint64_t terms, kernels::Mode mode) {
  if (terms < 1) throw DomainError("truncation N must be >= 1");
  const long prec = poly.precision();
  const Real r(static_cast<long>(poly.r()), prec);
  const Real zero(0L, prec);
  const Real two_pi = 2 * pi(prec);

  // With w = 2 pi n and e^{i w r} = 1,
  //   J(w) = int_0^r p e^{iwx} dx = sum_k (-1)^k (p^(k)(r) - p^(k)(0)) / (iw)^(k+1).
  // J(w) + J(-w) doubles the odd-k terms and cancels the even ones, and
  // (iw)^(2m) = (-1)^m w^(2m). Both sign conventions give the same pairs.
  std::vector<Complex> weights;
  Real scale = two_pi * two_pi;
  for (int k = 1; k <= poly.degree(); k += 2) {
    const int m = (k + 1) / 2;
    const Complex boundary = derivative_any_order(poly, r, k) - derivative_any_order(poly, zero, k);
    const long sign = (m % 2 == 1) ? 1 : -1;  // (-1)^k / (-1)^m with k odd
    weights.push_back(boundary * (2 * 2 * sign) / scale);
    scale *= two_pi * two_pi;
  }
  return kernels::even_power_series_sum(weights, terms, mode);
}

Complex f_at_zero(const SplicedFunction& g) {
  const SParameter& s = g.tail().s();
  const long prec = std::max(g.poly().precision(), s.precision());
  const Complex s_minus_one = s.value() - Real(1L, prec);
  const Complex tail = pow_positive(Real(static_cast<long>(g.r()), prec), -s_minus_one) / s_minus_one;
  return 2 * smoothing::integral_p(g.poly()) + 2 * tail;
}

std::complex<double> f_at_zero_quadrature(const SplicedFunction& g, double cutoff) {
  using boost::math::quadrature::gauss_kronrod;
  const double r = g.r();
  auto integrate = [&g](bool imaginary, double a, double b) {
    auto f = [&g, imaginary](double x) {
      const Complex v = smoothing::eval_g(g, x);
      return imaginary ? v.im.to_double() : v.re.to_double();
    };
    return gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-14);
  };
  std::complex<double> total;
  for (const auto& [a, b] : {std::pair{-cutoff, -r}, std::pair{-r, r}, std::pair{r, cutoff}}) {
    total += std::complex<double>(integrate(false, a, b), integrate(true, a, b));
  }
  return total;
}

double splice_gap_ratio(const SplicedFunction& g) {
  const long prec = std::max(g.poly().precision(), g.tail().s().precision()) + 64;
  double worst = 0;
  for (long side : {1L, -1L}) {
    const Real x0(side * g.r(), prec);
    for (int k = 0; k <= 2; ++k) {
      double previous = -1;
      for (double step : {1e-3, 1e-4, 1e-5}) {
        const Real h(step, prec);
        auto at = [&](int dir, long steps) { return smoothing::eval_g(g, x0 + h * (dir * steps)); };
        // Second-order one-sided stencils for g^(k)(x0) from the side `dir`.
        auto one_sided = [&](int dir) {
          switch (k) {
            case 0:
              return 2 * at(dir, 1) - at(dir, 2);
            case 1:
              return (-3 * at(dir, 0) + 4 * at(dir, 1) - at(dir, 2)) * dir / (2 * h);
            default:
              return (2 * at(dir, 0) - 5 * at(dir, 1) + 4 * at(dir, 2) - at(dir, 3)) / (h * h);
          }
        };
        const double gap = abs(one_sided(1) - one_sided(-1)).to_double();
        if (previous > 0) {
          worst = std::max(worst, gap / previous);
        } else if (previous == 0 && gap > 0) {
          worst = std::max(worst, 1.0);
        }
        previous = gap;
      }
    }
  }
  return worst;
}

RemainderExtraction extract_R(const SplicedFunction& g, const Complex& zeta_ref) {
  const SmoothingPolynomial& poly = g.poly();
  const long prec = poly.precision();
  Complex remainder = smoothing::eval_p(poly, Real(0L, prec)) + 2 * zeta_ref - f_at_zero(g) -
                      p_fourier_closed_form(poly);
  Real magnitude = abs(remainder);
  Real bound = estimator::remainder_bound(g.tail().s(), g.r());
  const bool pass = magnitude <= bound;
  return {std::move(remainder), std::move(magnitude), std::move(bound), pass};
}

RemainderExtraction extract_R(const SParameter& s, int r, const Complex& zeta_ref) {
  return extract_R(smoothing::build_spliced(s, r), zeta_ref);
}

HalfSum half_sum_check(int k, std::uint64_t terms, long precision_bits, kernels::Mode mode) {
  if (k < 1 || k > 5) throw DomainError("half-sum check needs 1 <= k <= 5");
  if (terms < 1) throw DomainError("truncation N must be >= 1");
  const long prec = precision_bits;
  const Real two_pi = 2 * pi(prec);

  // c_n = -sum_{l=1}^{k} k!/(k-l+1)! / (2 pi i n)^l
  auto coefficient = [k, prec, &two_pi](long n) {
    const Complex z(Real(0L, prec), two_pi * n);
    Complex acc = zero_like(prec);
    Complex z_power(Real(1L, prec), Real(0L, prec));
    long ratio = 1;  // k!/(k-l+1)!
    for (int l = 1; l <= k; ++l) {
      z_power *= z;
      if (l > 1) ratio *= k - l + 2;
      acc -= Complex(Real(ratio, prec)) / z_power;
    }
    return acc;
  };
  auto term = [&coefficient](std::uint64_t n) {
    const long nn = static_cast<long>(n);
    return coefficient(nn) + coefficient(-nn);
  };
  Complex total = kernels::sum(mode, 1, terms, term, prec);
  total += Real(1L, prec) / static_cast<long>(k + 1);
  return {std::move(total.re), std::move(total.im)};
}

// reports ---------------------------------------------------------------------

Check make_check(std::string name, double residual, double tolerance) {
  const bool pass = std::isfinite(residual) && residual <= tolerance;
  return {std::move(name), residual, tolerance, pass};
}

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::kAll;
  if (name == "identity") return Suite::kIdentity;
  if (name == "half-sum") return Suite::kHalfSum;
  if (name == "bernoulli") return Suite::kBernoulli;
  if (name == "smoothing") return Suite::kSmoothing;
  throw DomainError("unknown suite '" + name + "'");
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::kAll:
      return "all";
    case Suite::kIdentity:
      return "identity";
    case Suite::kHalfSum:
      return "half-sum";
    case Suite::kBernoulli:
      return "bernoulli";
    case Suite::kSmoothing:
      return "smoothing";
  }
  return "all";
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

void bernoulli_checks(const ValidationConfig& config, long prec, int r, std::vector<Check>& out) {
  const int table_size = std::max(2 * r + 3, 12);
  const bernoulli::BernoulliTable table = bernoulli::bernoulli_numbers(table_size);
  double failures = 0;
  for (int n = 1; n <= table.max_index(); ++n) {
    mpq_class total = 0;
    mpz_class binomial = 1;  // C(n+1, k)
    for (int k = 0; k <= n; ++k) {
      total += binomial * table[k];
      binomial = binomial * (n + 1 - k) / (k + 1);
    }
    if (total != 0) ++failures;
  }
  out.push_back(make_check("bernoulli.recurrence", failures, 0.0));

  failures = 0;
  for (int j = 0; j <= 8; ++j) {
    for (int rr = 1; rr <= 50; ++rr) {
      mpz_class brute = 0;
      for (int l = 0; l < rr; ++l) {
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(2 * j));
        brute += term;
      }
      if (bernoulli::power_sum(j, rr) != mpq_class(brute)) ++failures;
    }
  }
  out.push_back(make_check("bernoulli.power_sum", failures, 0.0));

  // B_m(x+1) - B_m(x) = m x^(m-1), coefficient by coefficient.
  failures = 0;
  for (int m = 1; m <= 12; ++m) {
    const bernoulli::BernoulliPolynomial poly(m);
    const auto& c = poly.coefficients();
    std::vector<mpq_class> shifted(c.size(), mpq_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      mpz_class binomial = 1;  // C(i, t)
      for (std::size_t t = 0; t <= i; ++t) {
        shifted[t] += c[i] * binomial;
        binomial = binomial * static_cast<unsigned long>(i - t) / static_cast<unsigned long>(t + 1);
      }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      const mpq_class want = (static_cast<int>(i) == m - 1) ? mpq_class(m) : mpq_class(0);
      if (shifted[i] - c[i] != want) ++failures;
    }
  }
  out.push_back(make_check("bernoulli.difference_identity", failures, 0.0));

  // sum_{n>N} n^-s lies in [(N+1)^(1-s)/(s-1), N^(1-s)/(s-1)].
  const long wide = prec + 64;
  const std::uint64_t terms = config.zeta_even_terms;
  double worst = 0;
  for (long s : {2L, 4L, 6L, 8L}) {
    const Real closed = bernoulli::zeta_even(s, wide);
    const Complex partial = kernels::inverse_power_sum(Complex(Real(s, wide)), 1, terms, config.mode);
    const Real rest = closed - partial.re;
    const Real n(static_cast<double>(terms), wide);
    const Real lower = pow(n + 1, 1 - s) / (s - 1);
    const Real upper = pow(n, 1 - s) / (s - 1);
    const Real outside = max(max(lower - rest, rest - upper), Real(0L, wide));
    worst = std::max(worst, (outside / upper).to_double());
  }
  out.push_back(make_check("bernoulli.zeta_even_bracket", worst, 0.0));
}

void smoothing_checks(const SplicedFunction& g, const ValidationConfig& config, std::vector<Check>& out) {
  const SmoothingPolynomial& poly = g.poly();
  const SParameter& s = poly.s();
  const int r = g.r();
  const long prec = poly.precision();

  double worst = 0;
  for (int n = 1; n <= r; ++n) {
    const Real x(static_cast<long>(n), prec);
    worst = std::max(worst, relative_gap(smoothing::eval_p(poly, x), pow_positive(x, -s.value())));
  }
  out.push_back(make_check("smoothing.interpolation", worst, smoothing::kMatchingTolerance));

  for (int k = 0; k <= 2; ++k) {
    worst = 0;
    for (long sign : {1L, -1L}) {
      const Real x(sign * r, prec);
      worst = std::max(worst, relative_gap(smoothing::eval_p(poly, x, k), smoothing::eval_h(g.tail(), x, k)));
    }
    out.push_back(make_check("smoothing.endpoint_k" + std::to_string(k), worst, smoothing::kMatchingTolerance));
  }

  const double worst_ratio = splice_gap_ratio(g);
  out.push_back(make_check("smoothing.c2_gap", worst_ratio, 0.2));

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> dist(-10.0 * r, 10.0 * r);
  worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    worst = std::max(worst, relative_gap(smoothing::eval_g(g, -x), smoothing::eval_g(g, x)));
  }
  out.push_back(make_check("smoothing.symmetry", worst, 1e-14));

  // sup |x|^4 |g| <= max(1, r^(2r+6) sqrt(r+2) |a|)
  Real norm(0L, prec);
  for (const Complex& a : poly.coefficients()) {
    const Real m = abs(a);
    norm += m * m;
  }
  norm = sqrt(norm);
  const Real rr(static_cast<long>(r), prec);
  const Real decay_bound = max(Real(1L, prec), pow(rr, 2L * r + 6) * sqrt(rr + 2) * norm);
  double decay = 0;
  double slope = 0;
  double curvature = 0;
  const Real s_abs = s.abs();
  const Real curvature_bound = s_abs * abs(s.value() + 1);
  for (int i = 0; i <= 400; ++i) {
    const Real x = Real(static_cast<long>(i), prec) * (10 * r) / 400;
    decay = std::max(decay, (pow(x, 4L) * abs(smoothing::eval_g(g, x)) / decay_bound).to_double());
    if (x > static_cast<double>(r)) {
      slope = std::max(slope, (pow(x, 5L) * abs(smoothing::eval_g(g, x, 1)) / s_abs).to_double());
      curvature = std::max(curvature, (pow(x, 6L) * abs(smoothing::eval_g(g, x, 2)) / curvature_bound).to_double());
    }
  }
  out.push_back(make_check("smoothing.decay", decay, 1.0));
  out.push_back(make_check("smoothing.derivative_decay", std::max(slope, curvature), 1.0));
}

void identity_checks(const SplicedFunction& g, const ValidationConfig& config, std::vector<Check>& out,
                     std::vector<std::string>& skipped) {
  const SmoothingPolynomial& poly = g.poly();
  const SParameter& s = poly.s();
  const int r = g.r();
  const Complex zeta_ref = zeta_reference(s, config.truncation_cap);

  const RemainderExtraction extracted = extract_R(g, zeta_ref);
  out.push_back(make_check("identity.master_remainder", extracted.magnitude.to_double(), extracted.bound.to_double()));

  const Complex closed = p_fourier_closed_form(poly);
  const double coarse = abs(truncated_P(poly, config.fourier_terms_coarse, config.mode) - closed).to_double();
  const double fine = abs(truncated_P(poly, config.fourier_terms_fine, config.mode) - closed).to_double();
  out.push_back(make_check("identity.fourier_convergence", fine, coarse));

  const Complex f0 = f_at_zero(g);
  const std::complex<double> quadrature = f_at_zero_quadrature(g);
  const double f0_gap = std::abs(quadrature - f0.to_std()) / (1.0 + abs(f0).to_double());
  out.push_back(make_check("identity.f_at_zero_quadrature", f0_gap, 1e-8));

  if (r >= 2) {
    const Complex head = estimator::head_sum_bernoulli(poly);
    const Complex direct = kernels::inverse_power_sum(s.value(), 1, static_cast<std::uint64_t>(r - 1),
                                                      kernels::Mode::kSerial);
    out.push_back(make_check("identity.head_sum", relative_gap(head, direct), 1e-10));
  } else {
    skipped.emplace_back("identity.head_sum");
  }

  const estimator::ZetaEstimate estimate = estimator::zeta_estimate(s, r);
  out.push_back(make_check("identity.estimate_bound", abs(estimate.value - zeta_ref).to_double(),
                           estimate.bound.to_double()));
}

void half_sum_checks(const SParameter& s, const ValidationConfig& config, std::vector<Check>& out) {
  for (int k = 1; k <= 5; ++k) {
    const HalfSum result = half_sum_check(k, config.half_sum_terms, s.precision(), config.mode);
    out.push_back(make_check("half_sum.k" + std::to_string(k), abs(result.re - 0.5).to_double(), 1e-3));
  }
}

}  // namespace

ValidationReport run_validation(const SParameter& s, int r, const ValidationConfig& config) {
  if (r < 1) throw DomainError("order r must be >= 1, got " + std::to_string(r));
  ValidationReport report;
  report.context = {s.re().to_double(), s.im().to_double(), r, s.precision(), config};

  const Suite suite = config.suite;
  auto wants = [suite](Suite part) { return suite == Suite::kAll || suite == part; };

  if (wants(Suite::kBernoulli)) bernoulli_checks(config, s.precision(), r, report.checks);
  if (wants(Suite::kHalfSum)) half_sum_checks(s, config, report.checks);
  if (wants(Suite::kSmoothing) || wants(Suite::kIdentity)) {
    const SplicedFunction g = smoothing::build_spliced(s, r);
    if (wants(Suite::kSmoothing)) smoothing_checks(g, config, report.checks);
    if (wants(Suite::kIdentity)) identity_checks(g, config, report.checks, report.skipped);
  }

  std::sort(report.checks.begin(), report.checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  std::sort(report.skipped.begin(), report.skipped.end());
  return report;
}

}  // namespace poisson_zeta::oracle
