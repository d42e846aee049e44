#include "oddsigma/verify.hpp"

#include <stdexcept>
#include <string>

#include "oddsigma/convolution.hpp"
#include "oddsigma/errors.hpp"
#include "oddsigma/polygonal.hpp"
#include "verify_detail.hpp"

namespace oddsigma {

std::string_view to_string(Conjecture c) {
  switch (c) {
    case Conjecture::kI:
      return "I";
    case Conjecture::kII:
      return "II";
    case Conjecture::kIII:
      return "III";
  }
  return "?";
}

Conjecture conjecture_from_int(int id) {
  switch (id) {
    case 1:
      return Conjecture::kI;
    case 2:
      return Conjecture::kII;
    case 3:
      return Conjecture::kIII;
    default:
      throw std::invalid_argument("conjecture must be 1, 2 or 3, got " + std::to_string(id));
  }
}

void validate(const CongruenceCase& c) {
  if (c.conjecture == Conjecture::kI) {
    require_convergent_order(c.m);
    return;
  }
  if (c.m < 1) {
    throw UnsupportedOrderError("modulus must be >= 1, got " + std::to_string(c.m));
  }
}

bool is_trivial(const CongruenceCase& c) {
  return c.conjecture != Conjecture::kI && c.m == 1;
}

std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::int64_t signed_witness_residue(std::span<const std::int64_t> witnesses, std::int64_t n,
                                    std::int64_t modulus) {
  if (witnesses.empty()) throw std::invalid_argument("signed_witness_residue: no witnesses");
  const std::int64_t first = mod_floor(triangular_sign(witnesses.front()) * n, modulus);
  for (const std::int64_t j : witnesses.subspan(1)) {
    const std::int64_t r = mod_floor(triangular_sign(j) * n, modulus);
    if (r != first) {
      throw AmbiguityError("n = " + std::to_string(n) + " has witnesses j = " +
                           std::to_string(witnesses.front()) + " and j = " + std::to_string(j) +
                           " with different required residues mod " + std::to_string(modulus));
    }
  }
  return first;
}

ResidueClass expected_residue(const CongruenceCase& c, std::int64_t n) {
  validate(c);
  if (n < 1) throw OutOfRangeError("expected_residue: n must be >= 1, got " + std::to_string(n));
  const std::int64_t order = detail::polygonal_order(c);
  const std::int64_t modulus = c.conjecture == Conjecture::kI ? 2 : c.m;
  const auto witnesses = polygonal_index(order, n);
  if (witnesses.empty()) return {0, modulus};
  if (c.conjecture == Conjecture::kIII) {
    return {signed_witness_residue(witnesses, n, modulus), modulus};
  }
  return {mod_floor(n, modulus), modulus};
}

std::int64_t congruence_lhs(const SigmaTable& table, const CongruenceCase& c, std::int64_t n) {
  validate(c);
  return convolve_sigma_odd(table, detail::polygonal_order(c), n, detail::lhs_weight(c)).value;
}

bool fails(const Counterexample& cx) {
  return mod_floor(cx.lhs_value, cx.modulus) != mod_floor(cx.required_residue, cx.modulus);
}

CongruenceReport check_congruence_serial(const CongruenceCase& c, std::int64_t n_max,
                                         const SigmaTable& table) {
  const auto support = detail::prepare_scan(c, n_max, table);
  CongruenceReport report{c, n_max, true, is_trivial(c), std::nullopt};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (auto cx = detail::evaluate_at(table, c, support, n)) {
      report.holds = false;
      report.minimal_counterexample = cx;
      break;
    }
  }
  return report;
}

std::vector<CongruenceReport> scan_iff(Conjecture conjecture, std::int64_t m_min,
                                       std::int64_t m_max, std::int64_t n_max,
                                       const SigmaTable& table, int threads) {
  if (m_min > m_max) {
    throw OutOfRangeError("empty m range [" + std::to_string(m_min) + ", " +
                          std::to_string(m_max) + "]");
  }
  for (std::int64_t m = m_min; m <= m_max; ++m) validate({conjecture, m});
  std::vector<CongruenceReport> reports;
  reports.reserve(static_cast<std::size_t>(m_max - m_min + 1));
  for (std::int64_t m = m_min; m <= m_max; ++m) {
    reports.push_back(check_congruence({conjecture, m}, n_max, table, threads));
  }
  return reports;
}

std::vector<std::int64_t> holds_set(std::span<const CongruenceReport> reports) {
  std::vector<std::int64_t> out;
  for (const auto& r : reports) {
    if (r.holds && !r.trivial) out.push_back(r.congruence_case.m);
  }
  return out;
}

namespace detail {

std::int64_t polygonal_order(const CongruenceCase& c) {
  return c.conjecture == Conjecture::kI ? c.m : 5;
}

WeightMode lhs_weight(const CongruenceCase& c) {
  return c.conjecture == Conjecture::kIII ? WeightMode::kTriangularSign : WeightMode::kUnsigned;
}

std::vector<PolygonalTerm> prepare_scan(const CongruenceCase& c, std::int64_t n_max,
                                        const SigmaTable& table) {
  validate(c);
  if (n_max < 1 || n_max > table.limit()) {
    throw OutOfRangeError("n_max = " + std::to_string(n_max) + " outside [1, " +
                          std::to_string(table.limit()) + "]");
  }
  return enumerate_upto(polygonal_order(c), n_max);
}

std::optional<Counterexample> evaluate_at(const SigmaTable& table, const CongruenceCase& c,
                                          std::span<const PolygonalTerm> support, std::int64_t n) {
  const std::int64_t lhs = convolve_sigma_odd(table, support, n, lhs_weight(c));
  const ResidueClass rhs = expected_residue(c, n);
  if (mod_floor(lhs, rhs.modulus) == rhs.residue) return std::nullopt;
  return Counterexample{n, lhs, rhs.residue, rhs.modulus};
}

}  // namespace detail

}  // namespace oddsigma
