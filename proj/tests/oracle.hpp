#pragma once

// Independent checks used by the tests: no standard bases involved.

#include <optional>
#include <vector>

#include "icis/polynomial.hpp"

namespace oracle {

/// dim O/(I + m^D) by dense linear algebra over Z/p, p = 2^31 - 1, for D = 1, 2, ...
/// until two consecutive values agree (then m^(D-1) lies in I).  nullopt if the
/// monomial space exceeds max_cols before that happens.
std::optional<int> local_colength(const std::vector<icis::Polynomial>& gens, int nvars, int max_cols = 4000);

}  // namespace oracle
