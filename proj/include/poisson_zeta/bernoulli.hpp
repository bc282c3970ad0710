#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "poisson_zeta/real.hpp"

namespace poisson_zeta::bernoulli {

/// Exact Bernoulli numbers B_0..B_N with the B_1 = -1/2 convention.
struct BernoulliTable {
  std::vector<mpq_class> numbers;

  [[nodiscard]] int max_index() const { return static_cast<int>(numbers.size()) - 1; }
  [[nodiscard]] const mpq_class& operator[](int n) const { return numbers.at(static_cast<std::size_t>(n)); }
};

/// B_m(x) = sum_k C(m, k) B_k x^(m-k), exact coefficients in ascending powers.
class BernoulliPolynomial {
 public:
  explicit BernoulliPolynomial(int degree);

  [[nodiscard]] int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  [[nodiscard]] const std::vector<mpq_class>& coefficients() const { return coefficients_; }

  [[nodiscard]] mpq_class operator()(const mpq_class& x) const;
  [[nodiscard]] Real operator()(const Real& x) const;

 private:
  std::vector<mpq_class> coefficients_;
};

/// Builds the table from sum_{k=0}^{n} C(n+1, k) B_k = 0. Throws DomainError for N < 0.
BernoulliTable bernoulli_numbers(int max_index);

/// Shared table holding at least B_0..B_N. Grown under a lock and never
/// mutated after publication, so the returned table may be read concurrently.
std::shared_ptr<const BernoulliTable> cached_table(int max_index);

mpq_class bernoulli_poly(int m, const mpq_class& x);
Real bernoulli_poly(int m, const Real& x);

/// sum_{l=0}^{r-1} l^(2j) (with 0^0 = 1), via (B_{2j+1}(r) - B_{2j+1}(0)) / (2j+1).
mpq_class power_sum(int j, int r);

/// sum_{l=1}^{r-1} l^(2j), via (B_{2j+1}(r) - B_{2j+1}(1)) / (2j+1).
/// Differs from power_sum only at j = 0, where the l = 0 term is dropped.
mpq_class power_sum_from_one(int j, int r);

/// Closed form of sum_{n>=1} n^(-s) for even s >= 2:
/// (-1)^((s+2)/2) (2 pi)^s B_s / (2 s!). Throws DomainError otherwise.
Real zeta_even(long s, long precision_bits = kDefaultPrecisionBits);

}  // namespace poisson_zeta::bernoulli
