#include "oddsigma/representations.hpp"

#include <algorithm>
#include <string>

#include "oddsigma/errors.hpp"
#include "oddsigma/polygonal.hpp"

namespace oddsigma {

namespace {

// Witnesses of coeff * ell^2 + P(k) = n, ell >= 1. Each polygonal inversion
// returns k ascending, so output is already ordered by (ell, k).
std::vector<Witness> collect(const PolygonalIndexing& poly, std::int64_t coeff, std::int64_t n) {
  std::vector<Witness> out;
  for (std::int64_t ell = 1; ell <= (n / coeff) / ell; ++ell) {
    for (const std::int64_t k : poly.index_of(n - coeff * ell * ell)) {
      out.push_back({ell, k});
    }
  }
  return out;
}

}  // namespace

RepresentationWitnesses count_representations(std::int64_t m, std::int64_t n) {
  const PolygonalIndexing poly(m);
  if (n < 1) {
    throw OutOfRangeError("count_representations: n must be >= 1, got " + std::to_string(n));
  }
  return RepresentationWitnesses{m, n, collect(poly, 1, n), collect(poly, 2, n)};
}

}  // namespace oddsigma
