#pragma once

#include <optional>
#include <vector>

#include "pcg/rational.hpp"

namespace pcg {

// Exact feasibility for A x <= b with x >= 0. Phase-1 simplex with Bland's
// rule, which cannot cycle, so it terminates on exact rationals. Returns a
// feasible point when one exists, std::nullopt when the system is infeasible.
std::optional<std::vector<Rational>> lp_feasible(
    const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

}  // namespace pcg
