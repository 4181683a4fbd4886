#pragma once

#include <string>
#include <vector>

#include "icis/ideal.hpp"

namespace icis {

/// Univariate polynomial in t with rational coefficients, constant term first.
struct HilbertPoly {
  std::vector<Rational> coeffs;

  HilbertPoly() = default;
  explicit HilbertPoly(std::vector<Rational> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational operator()(long t) const;
  /// Degree of the projective scheme: (leading coefficient) * (degree)!.
  Rational scheme_degree() const;
  /// Renders like "1+t", "4t", "1+2t".
  std::string to_string() const;

  friend bool operator==(const HilbertPoly& a, const HilbertPoly& b) { return a.coeffs == b.coeffs; }
};

/// Numerator of the Hilbert series of k[x_0..x_{n-1}]/M, coefficient of t^i at index i.
std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens, int nvars);

/// Hilbert polynomial of a homogeneous ideal completed under a graded ordering.
/// Throws NonHomogeneous if a generator is not homogeneous.
HilbertPoly hilbert_polynomial(const IdealBasis& I);

}  // namespace icis
