#pragma once

#include <string>

#include "icis/monomial.hpp"

namespace icis {

enum class OrderKind {
  /// Local degree reverse lexicographic (Singular "ds"): lower degree is larger.
  LocalDegRevLex,
  /// Graded reverse lexicographic (Singular "dp").
  GradedDegRevLex,
  /// Pure lexicographic with x > y > z > w > aux.
  Lex,
  /// Block order: the eliminated block by degree first, then dp on the rest.
  Elimination,
};

/// A monomial ordering over the first `nvars` slots.
///
/// For module computations `position_over_term` compares components first
/// (component 0 is largest) and only then the monomials.
struct OrderingTag {
  OrderKind kind = OrderKind::GradedDegRevLex;
  int nvars = kAmbientVars;
  unsigned elim_block = 0;  ///< slots eliminated first (Elimination only)
  bool position_over_term = false;

  static OrderingTag local(int nvars = kAmbientVars) { return {OrderKind::LocalDegRevLex, nvars, 0, false}; }
  static OrderingTag graded(int nvars = kAmbientVars) { return {OrderKind::GradedDegRevLex, nvars, 0, false}; }
  static OrderingTag lex(int nvars = kAmbientVars) { return {OrderKind::Lex, nvars, 0, false}; }
  static OrderingTag elimination(unsigned block, int nvars) { return {OrderKind::Elimination, nvars, block, false}; }

  bool is_local() const { return kind == OrderKind::LocalDegRevLex; }

  /// Three-way comparison: positive if a > b.
  int compare(Monomial a, Monomial b) const;
  bool greater(Monomial a, Monomial b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const OrderingTag&, const OrderingTag&) = default;
};

/// Reverse lexicographic tie-break on equal degree: positive if a > b.
int revlex_compare(Monomial a, Monomial b, int nvars);

}  // namespace icis
