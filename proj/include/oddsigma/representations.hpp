#pragma once

#include <cstdint>
#include <vector>

namespace oddsigma {

struct Witness {
  std::int64_t ell;
  std::int64_t k;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// Solutions (ell, k), ell >= 1, of ell^2 + P_m(k) = n (set A) and
/// 2 ell^2 + P_m(k) = n (set B), each sorted by (ell, k).
struct RepresentationWitnesses {
  std::int64_t m;
  std::int64_t n;
  std::vector<Witness> a_witnesses;
  std::vector<Witness> b_witnesses;

  std::int64_t a_count() const { return static_cast<std::int64_t>(a_witnesses.size()); }
  std::int64_t b_count() const { return static_cast<std::int64_t>(b_witnesses.size()); }
};

RepresentationWitnesses count_representations(std::int64_t m, std::int64_t n);

}  // namespace oddsigma
