#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace poisson_zeta {

/// Significand width used when nothing else is requested.
inline constexpr long kDefaultPrecisionBits = 128;
/// Narrowest precision accepted anywhere in the library (binary64).
inline constexpr long kMinPrecisionBits = 53;

/// Owning handle to an MPFR floating-point value.
///
/// Every value carries its own significand width. Binary operations round
/// to the wider of the two operands, so there is no global precision state
/// and values may be used freely from several threads.
class Real {
 public:
  Real() : Real(0L, kDefaultPrecisionBits) {}
  Real(double value, long precision_bits);
  Real(long value, long precision_bits);
  Real(int value, long precision_bits) : Real(static_cast<long>(value), precision_bits) {}
  Real(const mpq_class& value, long precision_bits);
  Real(const mpz_class& value, long precision_bits);

  /// Parses a decimal literal; throws std::invalid_argument on junk.
  static Real parse(std::string_view text, long precision_bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  [[nodiscard]] long precision() const { return mpfr_get_prec(value_); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal scientific notation. `digits == 0` picks enough digits to
  /// round-trip at this precision.
  [[nodiscard]] std::string to_string(int digits = 0) const;

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }

  [[nodiscard]] mpfr_srcptr get() const { return value_; }
  [[nodiscard]] mpfr_ptr get() { return value_; }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  template <std::integral I>
  Real& operator+=(I rhs) {
    mpfr_add_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator-=(I rhs) {
    mpfr_sub_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator*=(I rhs) {
    mpfr_mul_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator/=(I rhs) {
    mpfr_div_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  Real& operator+=(double rhs);
  Real& operator-=(double rhs);
  Real& operator*=(double rhs);
  Real& operator/=(double rhs);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  void widen_to(const Real& other);

  mpfr_t value_;
};

inline Real operator+(Real a, const Real& b) { return a += b; }
inline Real operator-(Real a, const Real& b) { return a -= b; }
inline Real operator*(Real a, const Real& b) { return a *= b; }
inline Real operator/(Real a, const Real& b) { return a /= b; }

template <typename T>
  requires std::integral<T> || std::floating_point<T>
Real operator+(Real a, T b) { return a += b; }
template <typename T>
  requires std::integral<T> || std::floating_point<T>
Real operator-(Real a, T b) { return a -= b; }
template <typename T>
  requires std::integral<T> || std::floating_point<T>
Real operator*(Real a, T b) { return a *= b; }
template <typename T>
  requires std::integral<T> || std::floating_point<T>
Real operator/(Real a, T b) { return a /= b; }
template <typename T>
  requires std::integral<T> || std::floating_point<T>
Real operator+(T a, Real b) { return b += a; }
template <typename T>
  requires std::integral<T> || std::floating_point<T>
Real operator*(T a, Real b) { return b *= a; }
template <typename T>
  requires std::integral<T> || std::floating_point<T>
Real operator-(T a, const Real& b) {
  if constexpr (std::integral<T>) {
    return Real(static_cast<long>(a), b.precision()) - b;
  } else {
    return Real(a, b.precision()) - b;
  }
}
template <typename T>
  requires std::integral<T> || std::floating_point<T>
Real operator/(T a, const Real& b) {
  if constexpr (std::integral<T>) {
    return Real(static_cast<long>(a), b.precision()) / b;
  } else {
    return Real(a, b.precision()) / b;
  }
}

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real pi(long precision_bits);

}  // namespace poisson_zeta
