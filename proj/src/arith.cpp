#include "oddsigma/arith.hpp"

#include <bit>
#include <string>

#include "oddsigma/errors.hpp"
#include "oddsigma/polygonal.hpp"

namespace oddsigma {

namespace {

void check_limit(std::int64_t limit) {
  if (limit < 1) {
    throw OutOfRangeError("sieve limit must be >= 1, got " + std::to_string(limit));
  }
}

void add_checked(std::uint64_t& slot, std::uint64_t d) {
  if (__builtin_add_overflow(slot, d, &slot)) {
    throw CapacityError("divisor sum exceeds 64-bit range");
  }
}

}  // namespace

std::uint64_t SigmaTable::sigma_odd(std::int64_t n) const {
  if (n < 1 || n > limit_) {
    throw OutOfRangeError("sigma_odd index " + std::to_string(n) + " outside [1, " +
                          std::to_string(limit_) + "]");
  }
  return sigma_odd_[static_cast<std::size_t>(n)];
}

std::uint64_t SigmaTable::sigma(std::int64_t n) const {
  if (n < 1 || n > limit_) {
    throw OutOfRangeError("sigma index " + std::to_string(n) + " outside [1, " +
                          std::to_string(limit_) + "]");
  }
  return sigma_[static_cast<std::size_t>(n)];
}

SigmaTable build_sigma_table_serial(std::int64_t limit) {
  check_limit(limit);
  const auto size = static_cast<std::size_t>(limit) + 1;
  std::vector<std::uint64_t> sigma_odd(size, 0);
  std::vector<std::uint64_t> sigma(size, 0);
  const auto n_max = static_cast<std::uint64_t>(limit);
  for (std::uint64_t d = 1; d <= n_max; ++d) {
    const bool odd = (d & 1U) != 0;
    for (std::uint64_t j = d; j <= n_max; j += d) {
      add_checked(sigma[j], d);
      if (odd) add_checked(sigma_odd[j], d);
    }
  }
  return SigmaTable(limit, std::move(sigma_odd), std::move(sigma));
}

std::uint64_t sigma_odd_at(const SigmaTable& table, std::int64_t n) {
  if (n <= 0) return 0;
  return table.sigma_odd(n);
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  // 2^ceil(bits/2) >= sqrt(n); Newton decreases monotonically from above.
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
  for (;;) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

unsigned __int128 isqrt(unsigned __int128 n) {
  if (n < 2) return n;
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  const auto lo = static_cast<std::uint64_t>(n);
  const int bits = hi != 0 ? 64 + std::bit_width(hi) : std::bit_width(lo);
  unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
  for (;;) {
    const unsigned __int128 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

bool is_perfect_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

bool is_square_or_twice_square(std::uint64_t n) {
  if (n == 0) return false;
  return is_perfect_square(n) || ((n & 1U) == 0 && is_perfect_square(n / 2));
}

const mpz_class& PartitionTable::at(std::int64_t n) const {
  static const mpz_class zero = 0;
  if (n < 0) return zero;
  if (n > limit()) {
    throw OutOfRangeError("partition index " + std::to_string(n) + " exceeds limit " +
                          std::to_string(limit()));
  }
  return p_[static_cast<std::size_t>(n)];
}

PartitionTable build_partition_table(std::int64_t limit) {
  if (limit < 0) {
    throw OutOfRangeError("partition limit must be >= 0, got " + std::to_string(limit));
  }
  std::vector<mpz_class> p(static_cast<std::size_t>(limit) + 1);
  p[0] = 1;
  for (std::int64_t n = 1; n <= limit; ++n) {
    mpz_class acc = 0;
    // p(n) = sum_{k != 0} (-1)^{k+1} p(n - P_5(k)), pairing k and -k.
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t pos = polygonal_value(5, k);
      if (pos > n) break;
      const std::int64_t neg = polygonal_value(5, -k);
      mpz_class pair = p[static_cast<std::size_t>(n - pos)];
      if (neg <= n) pair += p[static_cast<std::size_t>(n - neg)];
      if (k % 2 == 1) {
        acc += pair;
      } else {
        acc -= pair;
      }
    }
    p[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return PartitionTable(std::move(p));
}

}  // namespace oddsigma
