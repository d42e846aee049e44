#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace oddsigma {

class SigmaTable;

/// Reference divisor-marking sieve, single threaded.
SigmaTable build_sigma_table_serial(std::int64_t limit);

/// Segmented divisor-marking sieve over `threads` OpenMP threads. The result
/// is bit-identical to build_sigma_table_serial. threads <= 1 runs serially.
SigmaTable build_sigma_table(std::int64_t limit, int threads = 1);

/// Sieved odd-divisor sums and full divisor sums for 1 <= n <= limit.
///
/// Immutable after construction; safe to share between threads.
class SigmaTable {
 public:
  std::int64_t limit() const { return limit_; }

  /// sigma_odd(n) for 1 <= n <= limit. Throws OutOfRangeError otherwise.
  std::uint64_t sigma_odd(std::int64_t n) const;
  /// sigma(n) for 1 <= n <= limit. Throws OutOfRangeError otherwise.
  std::uint64_t sigma(std::int64_t n) const;

  // Raw arrays, index 0 is unused and holds 0.
  std::span<const std::uint64_t> sigma_odd_data() const { return sigma_odd_; }
  std::span<const std::uint64_t> sigma_data() const { return sigma_; }

  friend bool operator==(const SigmaTable&, const SigmaTable&) = default;

 private:
  friend SigmaTable build_sigma_table_serial(std::int64_t);
  friend SigmaTable build_sigma_table(std::int64_t, int);

  SigmaTable(std::int64_t limit, std::vector<std::uint64_t> sigma_odd,
             std::vector<std::uint64_t> sigma)
      : limit_(limit), sigma_odd_(std::move(sigma_odd)), sigma_(std::move(sigma)) {}

  std::int64_t limit_;
  std::vector<std::uint64_t> sigma_odd_;
  std::vector<std::uint64_t> sigma_;
};

/// sigma_odd(n) with the convention sigma_odd(n) = 0 for n <= 0.
std::uint64_t sigma_odd_at(const SigmaTable& table, std::int64_t n);

/// Exact floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);
unsigned __int128 isqrt(unsigned __int128 n);

bool is_perfect_square(std::uint64_t n);

/// True iff n = j^2 or n = 2 j^2 for some j >= 1.
bool is_square_or_twice_square(std::uint64_t n);

/// Partition numbers p(0..limit), exact.
class PartitionTable {
 public:
  explicit PartitionTable(std::vector<mpz_class> values) : p_(std::move(values)) {}

  std::int64_t limit() const { return static_cast<std::int64_t>(p_.size()) - 1; }
  /// p(n) for 0 <= n <= limit, 0 for n < 0.
  const mpz_class& at(std::int64_t n) const;

 private:
  std::vector<mpz_class> p_;
};

/// p(n) by Euler's pentagonal recurrence.
PartitionTable build_partition_table(std::int64_t limit);

}  // namespace oddsigma
