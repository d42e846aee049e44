#include "oddsigma/convolution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oddsigma/errors.hpp"

namespace oddsigma {

namespace {

void check_n(std::int64_t n, std::int64_t lo, std::int64_t limit, const char* what) {
  if (n < lo || n > limit) {
    throw OutOfRangeError(std::string(what) + ": n = " + std::to_string(n) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(limit) + "]");
  }
}

void accumulate(std::int64_t& acc, int sign, std::uint64_t term) {
  const auto t = static_cast<std::int64_t>(term);
  const bool overflow = sign > 0 ? __builtin_add_overflow(acc, t, &acc)
                                 : __builtin_sub_overflow(acc, t, &acc);
  if (overflow) throw CapacityError("convolution sum exceeds 64-bit range");
}

const std::vector<PolygonalTerm>& pentagonal_support(std::int64_t n) {
  thread_local std::vector<PolygonalTerm> cached;
  thread_local std::int64_t cached_bound = -1;
  if (n > cached_bound) {
    cached_bound = std::max(n, 2 * cached_bound + 64);
    cached = enumerate_upto(5, cached_bound);
  }
  return cached;
}

}  // namespace

std::string_view to_string(WeightMode mode) {
  switch (mode) {
    case WeightMode::kUnsigned:
      return "unsigned";
    case WeightMode::kAlternating:
      return "alternating";
    case WeightMode::kTriangularSign:
      return "triangular-sign";
  }
  return "?";
}

WeightMode parse_weight_mode(std::string_view name) {
  if (name == "unsigned") return WeightMode::kUnsigned;
  if (name == "alternating") return WeightMode::kAlternating;
  if (name == "triangular-sign") return WeightMode::kTriangularSign;
  throw std::invalid_argument("unknown weight mode: " + std::string(name));
}

int weight(WeightMode mode, std::int64_t k) {
  switch (mode) {
    case WeightMode::kUnsigned:
      return 1;
    case WeightMode::kAlternating:
      return k % 2 == 0 ? 1 : -1;
    case WeightMode::kTriangularSign:
      return triangular_sign(k);
  }
  return 1;
}

void require_convergent_order(std::int64_t m_polygonal) {
  if (m_polygonal == 1 || m_polygonal == 2) {
    throw DivergenceError("the sum over P_" + std::to_string(m_polygonal) +
                          "(k) diverges: infinitely many k have P(k) <= n");
  }
  if (m_polygonal < 1) {
    throw UnsupportedOrderError("polygonal order must be >= 3, got " +
                                std::to_string(m_polygonal));
  }
}

std::int64_t convolve_sigma_odd(const SigmaTable& table, std::span<const PolygonalTerm> support,
                                std::int64_t n, WeightMode mode) {
  std::int64_t acc = 0;
  for (const PolygonalTerm& term : support) {
    if (term.value >= n) continue;  // sigma_odd vanishes at 0 and below
    accumulate(acc, weight(mode, term.k), table.sigma_odd(n - term.value));
  }
  return acc;
}

ConvolutionValue convolve_sigma_odd(const SigmaTable& table, std::int64_t m_polygonal,
                                    std::int64_t n, WeightMode mode) {
  require_convergent_order(m_polygonal);
  check_n(n, 1, table.limit(), "convolve_sigma_odd");
  const auto support = enumerate_upto(m_polygonal, n);
  return ConvolutionValue{n, m_polygonal, mode, convolve_sigma_odd(table, support, n, mode),
                          static_cast<std::int64_t>(support.size())};
}

mpz_class euler_partition_residual(const PartitionTable& ptable, std::int64_t n) {
  check_n(n, 0, ptable.limit(), "euler_partition_residual");
  mpz_class acc = 0;
  for (const PolygonalTerm& term : pentagonal_support(n)) {
    if (term.value > n) continue;
    if (weight(WeightMode::kAlternating, term.k) > 0) {
      acc += ptable.at(n - term.value);
    } else {
      acc -= ptable.at(n - term.value);
    }
  }
  return acc;
}

std::int64_t euler_sigma_residual(const SigmaTable& table, std::int64_t n) {
  check_n(n, 1, table.limit(), "euler_sigma_residual");
  std::int64_t acc = 0;
  for (const PolygonalTerm& term : pentagonal_support(n)) {
    if (term.value > n) continue;
    // sigma(0) is replaced by n
    const std::uint64_t t =
        term.value == n ? static_cast<std::uint64_t>(n) : table.sigma(n - term.value);
    accumulate(acc, weight(WeightMode::kAlternating, term.k), t);
  }
  return acc;
}

}  // namespace oddsigma
