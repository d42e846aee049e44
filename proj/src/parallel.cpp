// OpenMP kernels. Each has a serial reference elsewhere that tests compare
// against bit for bit.

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "oddsigma/arith.hpp"
#include "oddsigma/errors.hpp"
#include "oddsigma/verify.hpp"
#include "verify_detail.hpp"

namespace oddsigma {

namespace {

// Captures the first exception thrown inside a parallel region so it can be
// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

// Adds every divisor pair (d, n/d), d <= sqrt(n), for n in [lo, hi].
// Returns false on overflow.
bool sieve_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t* sigma_odd,
                   std::uint64_t* sigma) {
  bool ok = true;
  const std::uint64_t root = isqrt(hi);
  for (std::uint64_t d = 1; d <= root; ++d) {
    const std::uint64_t square = d * d;
    std::uint64_t j = std::max(square, (lo + d - 1) / d * d);
    for (; j <= hi; j += d) {
      const std::uint64_t e = j / d;
      std::uint64_t pair = d;
      std::uint64_t odd_pair = (d & 1U) ? d : 0;
      if (e != d) {
        pair += e;
        if (e & 1U) odd_pair += e;
      }
      ok &= !__builtin_add_overflow(sigma[j], pair, &sigma[j]);
      ok &= !__builtin_add_overflow(sigma_odd[j], odd_pair, &sigma_odd[j]);
    }
  }
  return ok;
}

constexpr std::int64_t kScanChunk = 512;

}  // namespace

SigmaTable build_sigma_table(std::int64_t limit, int threads) {
  if (threads <= 1) return build_sigma_table_serial(limit);
  if (limit < 1) {
    throw OutOfRangeError("sieve limit must be >= 1, got " + std::to_string(limit));
  }
  const auto n_max = static_cast<std::uint64_t>(limit);
  std::vector<std::uint64_t> sigma_odd(n_max + 1, 0);
  std::vector<std::uint64_t> sigma(n_max + 1, 0);

  const std::uint64_t segment = std::max<std::uint64_t>(1 << 15, n_max / (8 * threads) + 1);
  const auto segments = static_cast<std::int64_t>((n_max + segment - 1) / segment);
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) reduction(&& : ok)
  for (std::int64_t s = 0; s < segments; ++s) {
    const std::uint64_t lo = 1 + static_cast<std::uint64_t>(s) * segment;
    const std::uint64_t hi = std::min(n_max, lo + segment - 1);
    ok = sieve_segment(lo, hi, sigma_odd.data(), sigma.data()) && ok;
  }
  if (!ok) throw CapacityError("divisor sum exceeds 64-bit range");
  return SigmaTable(limit, std::move(sigma_odd), std::move(sigma));
}

CongruenceReport check_congruence(const CongruenceCase& c, std::int64_t n_max,
                                  const SigmaTable& table, int threads) {
  if (threads <= 1) return check_congruence_serial(c, n_max, table);
  const auto support = detail::prepare_scan(c, n_max, table);

  const std::int64_t chunks = (n_max + kScanChunk - 1) / kScanChunk;
  std::vector<std::optional<Counterexample>> found(static_cast<std::size_t>(chunks));
  std::atomic<std::int64_t> earliest{std::numeric_limits<std::int64_t>::max()};
  ExceptionSlot errors;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
    const std::int64_t lo = 1 + chunk * kScanChunk;
    const std::int64_t hi = std::min(n_max, lo + kScanChunk - 1);
    // A failure already seen below this chunk makes it irrelevant.
    if (lo > earliest.load(std::memory_order_relaxed)) continue;
    errors.run([&] {
      for (std::int64_t n = lo; n <= hi; ++n) {
        if (auto cx = detail::evaluate_at(table, c, support, n)) {
          found[static_cast<std::size_t>(chunk)] = cx;
          std::int64_t prev = earliest.load(std::memory_order_relaxed);
          while (n < prev && !earliest.compare_exchange_weak(prev, n)) {
          }
          break;
        }
      }
    });
  }
  errors.rethrow();

  CongruenceReport report{c, n_max, true, is_trivial(c), std::nullopt};
  for (const auto& cx : found) {
    if (cx) {
      report.holds = false;
      report.minimal_counterexample = cx;
      break;
    }
  }
  return report;
}

}  // namespace oddsigma
