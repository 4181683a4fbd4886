#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icis/polynomial.hpp"

namespace icis {

/// Dense univariate polynomial over Q, coefficient of t^i at index i, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p);
int degree(const UPoly& p);
Rational evaluate(const UPoly& p, const Rational& t);
UPoly derivative(const UPoly& p);
UPoly multiply(const UPoly& a, const UPoly& b);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor (zero polynomial if both are zero).
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);
/// The polynomial of degree < n through the n points (xs[i], ys[i]); xs distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Distinct rational roots in ascending order (p-adic lifting plus exact check).
std::vector<Rational> rational_roots(const UPoly& p);

/// Coefficients of f viewed as a polynomial in one variable; f may only involve `var`.
UPoly to_univariate(const Polynomial& f, int var);

/// Exact square root of a non-negative rational, if it is a square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace icis
