#pragma once

// Brute-force references. Nothing here calls into the library, so tests that
// compare against these are independent of the implementation path.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::uint64_t sigma_odd(std::int64_t n) {
  std::uint64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0 && d % 2 == 1) s += static_cast<std::uint64_t>(d);
  }
  return s;
}

inline std::uint64_t sigma(std::int64_t n) {
  std::uint64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += static_cast<std::uint64_t>(d);
  }
  return s;
}

// Exhaustive search over j <= n.
inline bool square_or_twice_square(std::int64_t n) {
  for (std::int64_t j = 1; j <= n; ++j) {
    if (j * j == n || 2 * j * j == n) return true;
  }
  return false;
}

// P_m(k) straight from (m/2 - 1) k^2 - (m/2 - 2) k, in halves.
inline std::int64_t polygonal(std::int64_t m, std::int64_t k) {
  const std::int64_t twice = (m - 2) * k * k - (m - 4) * k;
  return twice / 2;
}

// For m >= 3, 2 P_m(k) >= k^2 - |k|, so no k beyond this bound has
// P_m(k) <= n. Tighter than |k| <= n + 2 and still exhaustive.
inline std::int64_t k_bound(std::int64_t n) {
  std::int64_t k = 1;
  while (k * k - k <= 2 * n) ++k;
  return k;
}

inline std::set<std::int64_t> polygonal_index(std::int64_t m, std::int64_t n) {
  std::set<std::int64_t> ks;
  const std::int64_t bound = k_bound(n);
  for (std::int64_t k = -bound; k <= bound; ++k) {
    if (polygonal(m, k) == n) ks.insert(k);
  }
  return ks;
}

inline int triangular_sign(std::int64_t k) {
  const std::int64_t t = (k * k - k) / 2;
  return t % 2 == 0 ? 1 : -1;
}

// Number of partitions of n into parts <= max_part, by direct recursion with
// memo; no use of the pentagonal recurrence.
inline std::vector<mpz_class> partitions(std::int64_t limit) {
  // ways[n] after processing parts 1..p = partitions of n into parts <= p
  std::vector<mpz_class> ways(static_cast<std::size_t>(limit) + 1, 0);
  ways[0] = 1;
  for (std::int64_t part = 1; part <= limit; ++part) {
    for (std::int64_t n = part; n <= limit; ++n) {
      ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - part)];
    }
  }
  return ways;
}

// Counts partitions by explicitly listing nonincreasing part sequences.
inline std::int64_t enumerate_partitions(std::int64_t n, std::int64_t max_part) {
  if (n == 0) return 1;
  std::int64_t count = 0;
  for (std::int64_t part = std::min(n, max_part); part >= 1; --part) {
    count += enumerate_partitions(n - part, part);
  }
  return count;
}

// sum over all k of w(k) sigma_odd(n - P_m(k)), sigma_odd(<= 0) = 0.
template <class Weight, class SigmaOdd>
std::int64_t convolution(std::int64_t m, std::int64_t n, Weight w, SigmaOdd sigma_odd_of) {
  std::int64_t acc = 0;
  const std::int64_t bound = k_bound(n);
  for (std::int64_t k = -bound; k <= bound; ++k) {
    const std::int64_t r = n - polygonal(m, k);
    if (r > 0) acc += w(k) * static_cast<std::int64_t>(sigma_odd_of(r));
  }
  return acc;
}

// (ell, k) with coeff ell^2 + P_m(k) = n, double loop over ell and k.
inline std::vector<std::pair<std::int64_t, std::int64_t>> representations(std::int64_t m,
                                                                          std::int64_t n,
                                                                          std::int64_t coeff) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t bound = k_bound(n);
  for (std::int64_t ell = 1; coeff * ell * ell <= n; ++ell) {
    for (std::int64_t k = -bound; k <= bound; ++k) {
      if (coeff * ell * ell + polygonal(m, k) == n) out.emplace_back(ell, k);
    }
  }
  return out;
}

}  // namespace oracle
