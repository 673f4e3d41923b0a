#pragma once

#include <vector>

#include "gitstate/rational.hpp"

namespace gitstate {

// Decides whether A lambda = b has a solution with lambda >= 0, exactly.
// Phase-1 simplex with Bland's rule; rational arithmetic throughout.
bool feasible_nonneg(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b);

}  // namespace gitstate
