#include "oddsigma/polygonal.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "oddsigma/arith.hpp"
#include "oddsigma/errors.hpp"

namespace oddsigma {

namespace {

using i128 = __int128;

// 2 P_m(k) in 128 bits; false if even that overflows.
bool twice_value(std::int64_t quadratic, std::int64_t linear, std::int64_t k, i128& out) {
  i128 sq = 0;
  i128 quad = 0;
  if (__builtin_mul_overflow(static_cast<i128>(k), static_cast<i128>(k), &sq)) return false;
  if (__builtin_mul_overflow(static_cast<i128>(quadratic), sq, &quad)) return false;
  const i128 lin = static_cast<i128>(linear) * static_cast<i128>(k);
  return !__builtin_sub_overflow(quad, lin, &out);
}

}  // namespace

PolygonalIndexing::PolygonalIndexing(std::int64_t m) : m_(m) {
  if (m < 3) {
    throw UnsupportedOrderError("polygonal order must be >= 3, got " + std::to_string(m));
  }
}

std::int64_t PolygonalIndexing::value(std::int64_t k) const {
  i128 twice = 0;
  if (!twice_value(quadratic(), linear(), k, twice) ||
      twice / 2 > std::numeric_limits<std::int64_t>::max()) {
    throw CapacityError("P_" + std::to_string(m_) + "(" + std::to_string(k) +
                        ") exceeds 64-bit range");
  }
  // (m-2)k^2 - (m-4)k = (m-2)k(k-1) + 2k is always even.
  return static_cast<std::int64_t>(twice / 2);
}

std::vector<PolygonalTerm> PolygonalIndexing::enumerate_upto(std::int64_t bound) const {
  std::vector<PolygonalTerm> terms;
  if (bound < 0) return terms;
  const i128 twice_bound = static_cast<i128>(bound) * 2;
  auto within = [&](std::int64_t k, std::int64_t& value) {
    i128 twice = 0;
    if (!twice_value(quadratic(), linear(), k, twice) || twice > twice_bound) return false;
    value = static_cast<std::int64_t>(twice / 2);
    return true;
  };

  terms.push_back({0, 0});
  // Both branches are nondecreasing in |k| for m >= 3, so each stops for good
  // at its first value above the bound.
  bool positive_alive = true;
  bool negative_alive = true;
  for (std::int64_t j = 1; positive_alive || negative_alive; ++j) {
    std::int64_t value = 0;
    if (positive_alive) {
      if (within(j, value)) {
        terms.push_back({j, value});
      } else {
        positive_alive = false;
      }
    }
    if (negative_alive) {
      if (within(-j, value)) {
        terms.push_back({-j, value});
      } else {
        negative_alive = false;
      }
    }
  }
  return terms;
}

std::vector<std::int64_t> PolygonalIndexing::index_of(std::int64_t n) const {
  std::vector<std::int64_t> roots;
  if (n < 0) return roots;
  // (m-2) k^2 - (m-4) k - 2n = 0
  const i128 a = quadratic();
  const i128 b = linear();
  i128 disc = 0;
  i128 scaled = 0;
  if (__builtin_mul_overflow(a * 8, static_cast<i128>(n), &scaled) ||
      __builtin_add_overflow(b * b, scaled, &disc)) {
    throw CapacityError("discriminant overflow inverting P_" + std::to_string(m_));
  }
  const auto root = static_cast<i128>(isqrt(static_cast<unsigned __int128>(disc)));
  if (root * root != disc) return roots;

  const i128 denom = 2 * a;
  for (const i128 numer : {b - root, b + root}) {
    if (numer % denom != 0) continue;
    const i128 k = numer / denom;
    if (k < std::numeric_limits<std::int64_t>::min() ||
        k > std::numeric_limits<std::int64_t>::max()) {
      continue;
    }
    roots.push_back(static_cast<std::int64_t>(k));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::int64_t polygonal_value(std::int64_t m, std::int64_t k) {
  return PolygonalIndexing(m).value(k);
}

std::vector<PolygonalTerm> enumerate_upto(std::int64_t m, std::int64_t bound) {
  return PolygonalIndexing(m).enumerate_upto(bound);
}

std::vector<std::int64_t> polygonal_index(std::int64_t m, std::int64_t n) {
  return PolygonalIndexing(m).index_of(n);
}

int triangular_sign(std::int64_t k) {
  // (k^2 - k)/2 mod 2 depends only on k mod 4.
  const std::int64_t r = ((k % 4) + 4) % 4;
  const std::int64_t exponent = (r * r - r) / 2;
  return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace oddsigma
