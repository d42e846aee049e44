#pragma once

#include <cstdint>
#include <vector>

namespace oddsigma {

struct PolygonalTerm {
  std::int64_t k;
  std::int64_t value;

  friend bool operator==(const PolygonalTerm&, const PolygonalTerm&) = default;
};

/// Generalized m-gonal numbers P_m(k) = ((m-2)k^2 - (m-4)k) / 2 for k in Z.
///
/// Only m >= 3 is representable: for m = 2 every integer is a value and for
/// m = 1 the parabola opens downward, so no finite enumeration exists.
class PolygonalIndexing {
 public:
  /// Throws UnsupportedOrderError for m < 3.
  explicit PolygonalIndexing(std::int64_t m);

  std::int64_t order() const { return m_; }
  // 2 P_m(k) = quadratic() k^2 - linear() k
  std::int64_t quadratic() const { return m_ - 2; }
  std::int64_t linear() const { return m_ - 4; }

  /// Throws CapacityError if the value does not fit in int64.
  std::int64_t value(std::int64_t k) const;

  /// All (k, P_m(k)) with P_m(k) <= bound, in the order k = 0, 1, -1, 2, -2, ...
  std::vector<PolygonalTerm> enumerate_upto(std::int64_t bound) const;

  /// All integers k with P_m(k) = n, ascending. Empty for n < 0.
  std::vector<std::int64_t> index_of(std::int64_t n) const;

 private:
  std::int64_t m_;
};

std::int64_t polygonal_value(std::int64_t m, std::int64_t k);
std::vector<PolygonalTerm> enumerate_upto(std::int64_t m, std::int64_t bound);
std::vector<std::int64_t> polygonal_index(std::int64_t m, std::int64_t n);

/// (-1)^{P_3(-k)}, where P_3(-k) = (k^2 - k) / 2.
int triangular_sign(std::int64_t k);

}  // namespace oddsigma
