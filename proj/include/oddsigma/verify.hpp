#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oddsigma/arith.hpp"

namespace oddsigma {

/// The three congruence families.
///
///   I   sum_k sigma_odd(n - P_m(k))                  vs  n (mod 2) on m-gonal n
///   II  sum_k sigma_odd(n - P_5(k))                  vs  n (mod m) on pentagonal n
///   III sum_k (-1)^{P_3(-k)} sigma_odd(n - P_5(k))   vs  (-1)^{P_3(-j)} n (mod m)
///                                                        on n = P_5(j)
/// Every other n must give 0.
enum class Conjecture { kI = 1, kII = 2, kIII = 3 };

std::string_view to_string(Conjecture c);
/// Accepts 1, 2, 3. Throws std::invalid_argument.
Conjecture conjecture_from_int(int id);

/// For kI, m is the polygonal order and the modulus is 2. For kII and kIII,
/// m is the modulus and the polygonal order is 5.
struct CongruenceCase {
  Conjecture conjecture;
  std::int64_t m;

  friend bool operator==(const CongruenceCase&, const CongruenceCase&) = default;
};

/// Throws DivergenceError for (kI, m in {1, 2}) and UnsupportedOrderError for
/// m <= 0.
void validate(const CongruenceCase& c);

/// Modulus 1 (kII/kIII with m = 1) makes every congruence hold.
bool is_trivial(const CongruenceCase& c);

struct ResidueClass {
  std::int64_t residue;  // in [0, modulus)
  std::int64_t modulus;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// Least nonnegative residue of value mod modulus.
std::int64_t mod_floor(std::int64_t value, std::int64_t modulus);

/// Required right-hand side for n >= 1.
ResidueClass expected_residue(const CongruenceCase& c, std::int64_t n);

/// Residue of sign(j) * n mod modulus agreed on by every witness index j.
/// Throws AmbiguityError if two witnesses disagree. witnesses must be non-empty.
std::int64_t signed_witness_residue(std::span<const std::int64_t> witnesses, std::int64_t n,
                                    std::int64_t modulus);

/// Exact left-hand side for one n.
std::int64_t congruence_lhs(const SigmaTable& table, const CongruenceCase& c, std::int64_t n);

struct Counterexample {
  std::int64_t n;
  std::int64_t lhs_value;
  std::int64_t required_residue;
  std::int64_t modulus;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// lhs_value is not congruent to required_residue mod modulus.
bool fails(const Counterexample& cx);

struct CongruenceReport {
  CongruenceCase congruence_case;
  std::int64_t n_max;
  bool holds;
  bool trivial;  // modulus 1; never counted toward a holds-set
  std::optional<Counterexample> minimal_counterexample;

  friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

/// Reference scan over n = 1..n_max, stopping at the first failure.
CongruenceReport check_congruence_serial(const CongruenceCase& c, std::int64_t n_max,
                                         const SigmaTable& table);

/// Chunked OpenMP scan. Identical result to check_congruence_serial for any
/// thread count.
CongruenceReport check_congruence(const CongruenceCase& c, std::int64_t n_max,
                                  const SigmaTable& table, int threads = 1);

/// One report per m in [m_min, m_max], ascending.
std::vector<CongruenceReport> scan_iff(Conjecture conjecture, std::int64_t m_min,
                                       std::int64_t m_max, std::int64_t n_max,
                                       const SigmaTable& table, int threads = 1);

/// The m whose report holds non-trivially, ascending.
std::vector<std::int64_t> holds_set(std::span<const CongruenceReport> reports);

}  // namespace oddsigma
