#include "poisson_zeta/bernoulli.hpp"

#include <mutex>
#include <string>

#include "poisson_zeta/errors.hpp"

namespace poisson_zeta::bernoulli {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void check_nonnegative(int value, const char* what) {
  if (value < 0) throw DomainError(std::string(what) + " must be >= 0, got " + std::to_string(value));
}

}  // namespace

BernoulliTable bernoulli_numbers(int max_index) {
  check_nonnegative(max_index, "Bernoulli index");
  BernoulliTable table;
  table.numbers.reserve(static_cast<std::size_t>(max_index) + 1);
  table.numbers.emplace_back(1);
  for (int n = 1; n <= max_index; ++n) {
    mpq_class acc = 0;
    for (int k = 0; k < n; ++k) acc += mpq_class(binomial(n + 1, k)) * table.numbers[static_cast<std::size_t>(k)];
    mpq_class value = -acc / (n + 1);
    value.canonicalize();
    table.numbers.push_back(std::move(value));
  }
  return table;
}

std::shared_ptr<const BernoulliTable> cached_table(int max_index) {
  check_nonnegative(max_index, "Bernoulli index");
  static std::mutex mutex;
  static std::shared_ptr<const BernoulliTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->max_index() < max_index) {
    // Grow geometrically so repeated small increases do not recompute O(N^2) work each time.
    const int current = table ? table->max_index() : 0;
    table = std::make_shared<const BernoulliTable>(bernoulli_numbers(std::max(max_index, 2 * current)));
  }
  return table;
}

BernoulliPolynomial::BernoulliPolynomial(int degree) {
  check_nonnegative(degree, "Bernoulli polynomial degree");
  const auto table = cached_table(degree);
  coefficients_.resize(static_cast<std::size_t>(degree) + 1);
  // Coefficient of x^(m-k) is C(m, k) B_k.
  for (int k = 0; k <= degree; ++k) {
    coefficients_[static_cast<std::size_t>(degree - k)] = mpq_class(binomial(degree, k)) * (*table)[k];
  }
}

mpq_class BernoulliPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

Real BernoulliPolynomial::operator()(const Real& x) const {
  const long prec = x.precision();
  Real acc(0L, prec);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += Real(*it, prec);
  }
  return acc;
}

mpq_class bernoulli_poly(int m, const mpq_class& x) { return BernoulliPolynomial(m)(x); }

Real bernoulli_poly(int m, const Real& x) { return BernoulliPolynomial(m)(x); }

mpq_class power_sum(int j, int r) {
  check_nonnegative(j, "power index j");
  if (r < 1) throw DomainError("r must be >= 1, got " + std::to_string(r));
  const BernoulliPolynomial poly(2 * j + 1);
  mpq_class out = (poly(mpq_class(r)) - poly(mpq_class(0))) / (2 * j + 1);
  out.canonicalize();
  return out;
}

mpq_class power_sum_from_one(int j, int r) {
  check_nonnegative(j, "power index j");
  if (r < 1) throw DomainError("r must be >= 1, got " + std::to_string(r));
  const BernoulliPolynomial poly(2 * j + 1);
  mpq_class out = (poly(mpq_class(r)) - poly(mpq_class(1))) / (2 * j + 1);
  out.canonicalize();
  return out;
}

Real zeta_even(long s, long precision_bits) {
  if (s < 2 || s % 2 != 0) throw DomainError("zeta_even needs an even s >= 2, got " + std::to_string(s));
  const auto table = cached_table(static_cast<int>(s));
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(s));
  mpq_class rational = (*table)[static_cast<int>(s)] / (2 * mpq_class(factorial));
  if (((s + 2) / 2) % 2 != 0) rational = -rational;
  rational.canonicalize();
  const Real two_pi = pi(precision_bits) * 2;
  return pow(two_pi, s) * Real(rational, precision_bits);
}

}  // namespace poisson_zeta::bernoulli
