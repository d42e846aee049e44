#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include <gmpxx.h>

#include "oddsigma/arith.hpp"
#include "oddsigma/polygonal.hpp"

namespace oddsigma {

enum class WeightMode {
  kUnsigned,        // w(k) = 1
  kAlternating,     // w(k) = (-1)^k
  kTriangularSign,  // w(k) = (-1)^{P_3(-k)}
};

std::string_view to_string(WeightMode mode);
/// Accepts "unsigned", "alternating", "triangular-sign". Throws std::invalid_argument.
WeightMode parse_weight_mode(std::string_view name);

int weight(WeightMode mode, std::int64_t k);

struct ConvolutionValue {
  std::int64_t n;
  std::int64_t m_polygonal;
  WeightMode weight_mode;
  std::int64_t value;
  /// Number of (k, P(k)) pairs with P(k) <= n visited by the sum.
  std::int64_t support_size;

  friend bool operator==(const ConvolutionValue&, const ConvolutionValue&) = default;
};

/// Rejects polygonal orders whose support is infinite (DivergenceError for
/// m in {1, 2}) or meaningless (UnsupportedOrderError for m <= 0).
void require_convergent_order(std::int64_t m_polygonal);

/// sum_k w(k) sigma_odd(n - P_m(k)) over all k with P_m(k) <= n.
ConvolutionValue convolve_sigma_odd(const SigmaTable& table, std::int64_t m_polygonal,
                                    std::int64_t n, WeightMode mode);

/// Same sum over a precomputed support. `support` must be
/// enumerate_upto(m, bound) for some bound >= n; terms above n are skipped.
/// No range checks beyond n <= table.limit().
std::int64_t convolve_sigma_odd(const SigmaTable& table, std::span<const PolygonalTerm> support,
                                std::int64_t n, WeightMode mode);

/// sum_k (-1)^k p(n - P_5(k)); equals 1 for n = 0 and 0 otherwise.
mpz_class euler_partition_residual(const PartitionTable& ptable, std::int64_t n);

/// sum_k (-1)^k t(n - P_5(k)) with t(x) = sigma(x) for x >= 1, t(0) = n;
/// equals 0 for every n >= 1.
std::int64_t euler_sigma_residual(const SigmaTable& table, std::int64_t n);

}  // namespace oddsigma
