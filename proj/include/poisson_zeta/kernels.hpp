#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "poisson_zeta/complex.hpp"

namespace poisson_zeta::kernels {

enum class Mode { kSerial, kParallel };

/// Terms per OpenMP work item. The partition depends only on the index
/// range, never on the thread count, so parallel results are reproducible.
inline constexpr std::uint64_t kBlockSize = 512;

/// sum_{n=first}^{last} term(n), accumulated left to right. Reference path.
template <class Term>
Complex serial_sum(std::uint64_t first, std::uint64_t last, const Term& term, long prec) {
  Complex acc(Real(0L, prec));
  for (std::uint64_t n = first; n <= last && n >= first; ++n) acc += term(n);
  return acc;
}

/// Same sum, blocks of kBlockSize reduced in parallel and then combined in
/// block order. `term` must be safe to call concurrently and must not throw.
template <class Term>
Complex parallel_sum(std::uint64_t first, std::uint64_t last, const Term& term, long prec) {
  if (last < first) return Complex(Real(0L, prec));
  const std::uint64_t count = last - first + 1;
  const std::int64_t blocks = static_cast<std::int64_t>((count + kBlockSize - 1) / kBlockSize);
  std::vector<Complex> partial(static_cast<std::size_t>(blocks), Complex(Real(0L, prec)));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = first + static_cast<std::uint64_t>(b) * kBlockSize;
    const std::uint64_t hi = std::min(last, lo + kBlockSize - 1);
    partial[static_cast<std::size_t>(b)] = serial_sum(lo, hi, term, prec);
  }
  Complex acc(Real(0L, prec));
  for (const Complex& p : partial) acc += p;
  return acc;
}

template <class Term>
Complex sum(Mode mode, std::uint64_t first, std::uint64_t last, const Term& term, long prec) {
  return mode == Mode::kParallel ? parallel_sum(first, last, term, prec) : serial_sum(first, last, term, prec);
}

/// sum_{n=first}^{last} n^(-s), principal branch with real logarithms.
Complex inverse_power_sum(const Complex& s, std::uint64_t first, std::uint64_t last, Mode mode = Mode::kParallel);

/// sum_{n=1}^{count} sum_{m=1}^{M} weights[m-1] * n^(-2m).
Complex even_power_series_sum(std::span<const Complex> weights, std::uint64_t count,
                              Mode mode = Mode::kParallel);

}  // namespace poisson_zeta::kernels
