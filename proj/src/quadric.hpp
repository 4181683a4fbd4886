#pragma once

// Quadratic and linear forms in the four ambient variables as dense data.

#include <vector>

#include "icis/univariate.hpp"
#include "linalg.hpp"

namespace icis::quadric {

using Vector = std::vector<Rational>;

/// Symmetric matrix with q = x^T M x (q homogeneous of degree 2).
linalg::Matrix matrix_of(const Polynomial& q);
Polynomial form_of(const linalg::Matrix& m);

Vector coefficients_of_linear(const Polynomial& l);
Polynomial linear_form(const Vector& a);

/// q restricted to the hyperplane l = 0, written without the pivot variable of l.
Polynomial restrict_to_hyperplane(const Polynomial& q, const Polynomial& l);

/// Factorization of a form of rank <= 2.
struct Factorization {
  int rank = 0;
  /// Both factors rational (rank 1 gives l1 = l2).
  bool rational = false;
  Polynomial l1, l2;
  /// Otherwise the factors are a +- sqrt(disc) b, with disc not a square.
  Rational disc;
  Vector a, b;
};

/// Throws InvalidInput when the rank exceeds 2.
Factorization factor(const linalg::Matrix& m);

/// det(s A + B) as a polynomial in s.
UPoly pencil_determinant(const linalg::Matrix& a, const linalg::Matrix& b);

/// Whether the restriction of M to the hyperplane (a + sqrt(d) b) . x = 0 is degenerate.
bool degenerate_on_conjugate_plane(const linalg::Matrix& m, const Vector& a, const Vector& b, const Rational& d);

/// Binary form of degree deg(f) obtained by restricting f to the line spanned by
/// k1, k2: f(s k1 + k2) as a polynomial in s of formal degree deg(f).
UPoly restrict_to_line(const Polynomial& f, const Vector& k1, const Vector& k2);

/// Number of distinct points on the line where all of `forms` vanish
/// (the forms restricted to the line must not all vanish identically).
int common_points_on_line(const std::vector<Polynomial>& forms, const Vector& k1, const Vector& k2);

}  // namespace icis::quadric
