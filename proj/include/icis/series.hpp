#pragma once

#include <vector>

#include "icis/polynomial.hpp"

namespace icis {

/// f(x + p) with every term of degree above n dropped.
Polynomial translate(const Polynomial& f, const std::vector<Rational>& p, int n);

/// Power series phi in the variables other than `var` with g(phi) = 0 mod m^(n+1),
/// where g(0) = 0 and dg/dvar(0) != 0.
Polynomial implicit_solve(const Polynomial& g, int var, int n);

/// Solves dh/du_j = 0 (u = `vars`) for the u_j as power series in the other
/// variables, assuming the Hessian of h in `vars` is invertible at the origin.
/// Returns one series per variable in `vars`.
std::vector<Polynomial> solve_critical(const Polynomial& h, const std::vector<int>& vars, int n);

/// Renames variables: slot vars[k] becomes slot k.  Variables not listed must not occur.
Polynomial compact_variables(const Polynomial& f, const std::vector<int>& vars);

}  // namespace icis
