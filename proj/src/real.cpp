#include "poisson_zeta/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace poisson_zeta {

namespace {

mpfr_prec_t clamp_precision(long bits) {
  return static_cast<mpfr_prec_t>(std::clamp<long>(bits, MPFR_PREC_MIN, MPFR_PREC_MAX));
}

}  // namespace

Real::Real(double value, long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, long precision_bits) {
  Real out(0L, precision_bits);
  const std::string buffer(text);
  if (buffer.empty()) throw std::invalid_argument("empty decimal literal");
  char* end = nullptr;
  mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (end == buffer.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + buffer + "'");
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(std::max(digits, 0)), value_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // Strip trailing zeros but keep at least one digit after the point.
  while (mantissa.size() > 2 && mantissa.back() == '0') mantissa.pop_back();
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  out += "e" + std::to_string(static_cast<long>(exponent) - 1);
  return out;
}

void Real::widen_to(const Real& other) {
  if (mpfr_get_prec(other.value_) > mpfr_get_prec(value_)) {
    mpfr_prec_round(value_, mpfr_get_prec(other.value_), MPFR_RNDN);
  }
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  widen_to(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  widen_to(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  widen_to(rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(double rhs) {
  mpfr_add_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(double rhs) {
  mpfr_sub_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || std::isnan(b)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real out(x);
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x);
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x);
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x);
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sin(const Real& x) {
  Real out(x);
  mpfr_sin(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real cos(const Real& x) {
  Real out(x);
  mpfr_cos(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(0L, std::max(base.precision(), exponent.precision()));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base);
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }
Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }

Real pi(long precision_bits) {
  Real out(0L, precision_bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

}  // namespace poisson_zeta
