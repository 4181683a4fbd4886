#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icis/germ.hpp"
#include "icis/hilbert.hpp"
#include "icis/ideal.hpp"

namespace icis {

enum class TwoJetClass { T2222, Tp222, Tpq22, Tpqr2, Tpqrs, I, Jprime, Kprime, L, M, None };

const char* to_string(TwoJetClass c);

/// One primary component over Q of the 2-jet ideal.
struct ComponentReport {
  IdealBasis Q;
  /// Affine Krull dimension of Q[x,y,z,w]/Q.
  int d = 0;
  HilbertPoly h;
  /// Number of absolutely irreducible components conjugate over Q.
  int j = 1;
};

struct TwoJetAnalysis {
  std::vector<ComponentReport> components;
  int s = 0;
  int t = 0;
  TwoJetClass cls = TwoJetClass::None;

  /// s = 4: Krull dimensions of the pairwise sums Q_i + Q_j, ascending.
  std::vector<int> pairwise_sum_dims;
  /// s = 3 (conic and two lines): Q_3 in Q_1 + Q_2, and Q_3 has a generator of order 2.
  std::optional<bool> containment;
  std::optional<bool> order_two_generator;
  /// Two conics, or a line and a twisted cubic: whether they touch at a single point.
  std::optional<bool> tangent;
  /// Singularities of the curve V(I_2) in P^3 (irreducible quartic case); these
  /// are the types of the strict transform of I_2 on the exceptional divisor.
  std::vector<GermType> curve_types;
  std::vector<std::string> diagnostics;
};

/// Primary components over Q of an ideal generated by two quadratic forms
/// whose zero set is a curve in P^3.  Throws UnsupportedTwoJet when the forms
/// do not cut out a reduced curve.
std::vector<ComponentReport> decompose_two_quadrics(const IdealBasis& I2);

/// Two-jet analysis of <f, g>.  Never throws for valid polynomials; anything
/// outside the tabulated configurations gets cls = None and a diagnostic.
TwoJetAnalysis classify_two_jet(const Polynomial& f, const Polynomial& g);
TwoJetAnalysis classify_two_jet(const IdealBasis& I);

}  // namespace icis
