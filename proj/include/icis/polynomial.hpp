#pragma once

#include <gmpxx.h>

#include <array>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icis/monomial.hpp"
#include "icis/ordering.hpp"

namespace icis {

using Rational = mpq_class;
using Integer = mpz_class;

/// Order of the zero polynomial.
inline constexpr int kInfinite = std::numeric_limits<int>::max();

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending graded reverse lexicographic order and
/// never hold a zero coefficient, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(Monomial m, const Rational& c = 1);
  static Polynomial variable(int var, int power = 1);
  /// Builds from arbitrary terms: sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest total degree of a term; -1 for zero.
  int degree() const;
  Rational coefficient(Monomial m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  /// Bit set of the variables that occur.
  unsigned support() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(int e) const;
  Polynomial derivative(int var) const;
  /// Sum of the terms of total degree exactly `d`.
  Polynomial homogeneous_part(int d) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Product with every term of total degree above `max_degree` dropped.
  static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Canonical names of the variable slots: x y z w u v t.
char variable_name(int var);

/// Sum of all terms of total degree at most k.
Polynomial jet(const Polynomial& f, int k);
/// Minimal total degree of a term, kInfinite for zero.
int order(const Polynomial& f);

/// One image per variable slot; unset slots map to themselves.
class SubstitutionMap {
 public:
  SubstitutionMap();
  static SubstitutionMap identity() { return SubstitutionMap(); }

  SubstitutionMap& set(int var, Polynomial image);
  const Polynomial& image(int var) const { return images_[var]; }

  /// Linear substitution x_i -> sum_j m[i][j] x_j on the ambient variables.
  static SubstitutionMap linear(const std::array<std::array<Rational, kAmbientVars>, kAmbientVars>& m);

  Polynomial apply(const Polynomial& f) const;
  /// Same as apply, but drops every term of degree above max_degree.
  Polynomial apply_truncated(const Polynomial& f, int max_degree) const;

 private:
  std::array<Polynomial, kMaxVars> images_;
};

Polynomial substitute(const Polynomial& f, const SubstitutionMap& m);

/// Parses the polynomial grammar (variables x,y,z,w; integers, p/q; + - * ^; parentheses).
Polynomial parse_polynomial(std::string_view text);
/// Splits "f, g" or newline separated input (with # comments) into generators.
std::vector<Polynomial> parse_generators(std::string_view text);

}  // namespace icis
