#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oddsigma/convolution.hpp"
#include "oddsigma/verify.hpp"

namespace oddsigma::detail {

std::int64_t polygonal_order(const CongruenceCase& c);
WeightMode lhs_weight(const CongruenceCase& c);

/// Validates the case and n_max against the table, returns the support for
/// every n <= n_max.
std::vector<PolygonalTerm> prepare_scan(const CongruenceCase& c, std::int64_t n_max,
                                        const SigmaTable& table);

/// Counterexample at n, or nullopt if the congruence holds there.
std::optional<Counterexample> evaluate_at(const SigmaTable& table, const CongruenceCase& c,
                                          std::span<const PolygonalTerm> support, std::int64_t n);

}  // namespace oddsigma::detail
