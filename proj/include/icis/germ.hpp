#pragma once

#include <string>
#include <vector>

#include "icis/invariants.hpp"
#include "icis/polynomial.hpp"

namespace icis {

enum class GermKind { Smooth, A, D, E, J, Other };

/// Simple, exceptional and J-series germ types.  For E the index is the Milnor
/// number (E6, E7, E8, E12, E13, E14, ...).  J(k,i) with k >= 1 is the series
/// x^3 + x^2 y^(k+1) + y^(3k+3+i), Milnor number 6k+4+i (J(1,0) is Arnold's J10).
struct GermType {
  GermKind kind = GermKind::Other;
  int k = 0;
  int i = 0;

  static GermType smooth() { return {GermKind::Smooth, 0, 0}; }
  static GermType A(int k) { return {GermKind::A, k, 0}; }
  static GermType D(int k) { return {GermKind::D, k, 0}; }
  static GermType E(int k) { return {GermKind::E, k, 0}; }
  static GermType J(int k, int i) { return {GermKind::J, k, i}; }
  static GermType other() { return {GermKind::Other, 0, 0}; }

  /// Milnor number of the type (0 for smooth, -1 for Other).
  int milnor() const;
  /// "A1", "D5", "E6", "J1,0", "Other".
  std::string to_string() const;

  friend auto operator<=>(const GermType&, const GermType&) = default;
};

/// Parses the output of GermType::to_string.
GermType parse_germ_type(const std::string& s);

/// Type of a plane curve or surface germ f(x_0..x_{n-1}) = 0 at the origin.
GermType classify_hypersurface(const Polynomial& f, int nvars, int cap = kDefaultMuCap);

/// Type of the germ of V(gens) at `point` (gens in the first nvars variables).
/// Generators with a linear part are eliminated until one equation is left; if
/// that is impossible the result is Other.
GermType classify_germ(const std::vector<Polynomial>& gens, int nvars, const std::vector<Rational>& point,
                       int cap = kDefaultMuCap);

}  // namespace icis
