#pragma once

#include <vector>

#include "icis/germ.hpp"
#include "icis/polynomial.hpp"

namespace icis {

/// Chart i of the blow-up of the origin of A^4: x_i -> x_i, x_j -> x_i * x_j.
Polynomial chart_pullback(const Polynomial& f, int chart);

/// Pullback to chart i divided by x_i^ord(f).
Polynomial strict_transform(const Polynomial& f, int chart);

/// All rational solutions of a zero-dimensional system in the variables `vars`
/// (other slots of each returned point are 0).  Throws
/// PositiveDimensionalSingularLocus if the system has a positive dimensional
/// solution set and IrrationalSingularPoint if some solution is not rational.
std::vector<std::vector<Rational>> rational_points(const std::vector<Polynomial>& gens, std::vector<int> vars);

struct SingularPoint {
  int chart = 0;
  /// Coordinates in the chart (the exceptional coordinate is 0).
  std::vector<Rational> point;
  GermType type;
};

/// Singular points of the projective curve V(q1, q2) in P^3 (homogeneous q1, q2),
/// each reported once in the first chart containing it, with its plane curve type.
std::vector<SingularPoint> curve_singularities(const Polynomial& q1, const Polynomial& q2, int cap = kDefaultMuCap);

struct BlowupReport {
  std::vector<SingularPoint> points;
  /// Types of the singular points, sorted; empty if the strict transform is smooth along E.
  std::vector<GermType> types;
};

/// Singular points of the strict transform of V(f, g) on the exceptional
/// divisor of the blow-up of the origin.  Requires the initial forms of f and g
/// to cut out a curve in P^3 (UnsupportedTwoJet otherwise).
BlowupReport blowup(const Polynomial& f, const Polynomial& g, int cap = kDefaultMuCap);

inline std::vector<GermType> blowup_type_list(const Polynomial& f, const Polynomial& g, int cap = kDefaultMuCap) {
  return blowup(f, g, cap).types;
}

}  // namespace icis
