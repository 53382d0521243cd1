#pragma once

#include <optional>
#include <vector>

#include "sasakit/types.hpp"

namespace sasakit {

/// Finds x >= 0 with A x == b over the rationals (phase-one simplex with
/// Bland's rule, so it cannot cycle). `rows` holds the rows of A.
std::optional<RatVector> find_nonnegative_solution(const std::vector<RatVector>& rows, const RatVector& b);

/// True iff target lies in the closed cone generated by `generators`.
bool in_cone(const std::vector<IntVector>& generators, const IntVector& target);

/// True iff target == sum mu_i g_i for some mu with every mu_i > 0 (the
/// relative interior of the cone when the generators span it).
bool in_open_cone(const std::vector<IntVector>& generators, const RatVector& target);

}  // namespace sasakit
