#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icis/ordering.hpp"
#include "icis/polynomial.hpp"

namespace icis {

/// Generators of an ideal together with an ordering and, once computed,
/// a minimal standard basis with respect to that ordering.
struct IdealBasis {
  std::vector<Polynomial> generators;
  OrderingTag ordering = OrderingTag::graded();
  std::optional<std::vector<Polynomial>> completed;

  IdealBasis() = default;
  explicit IdealBasis(std::vector<Polynomial> gens, OrderingTag ord = OrderingTag::graded())
      : generators(std::move(gens)), ordering(ord) {}

  bool is_completed() const { return completed.has_value(); }
  /// The completed basis; throws InvalidInput if the basis has not been computed.
  const std::vector<Polynomial>& basis() const;
  /// Leading monomials of the completed basis under `ordering`.
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;
};

/// Leading monomial of f under an ordering (f nonzero).
Monomial leading_monomial(const Polynomial& f, const OrderingTag& order);

IdealBasis standard_basis(const IdealBasis& I);
inline IdealBasis standard_basis(std::vector<Polynomial> gens, OrderingTag ord) {
  return standard_basis(IdealBasis(std::move(gens), ord));
}

/// Number of standard monomials of a completed basis, kInfinite when infinite.
int vdim(const IdealBasis& I);
/// Krull dimension of the quotient, read off the leading ideal.
int krull_dim(const IdealBasis& I);

bool contains(const IdealBasis& I, const Polynomial& f);
bool ideal_contains(const IdealBasis& I, const IdealBasis& J);
Polynomial normal_form(const IdealBasis& I, const Polynomial& f);

/// I : f^infinity.  Result is completed under I.ordering (which must be global).
IdealBasis saturate(const IdealBasis& I, const Polynomial& f);
/// I + J, completed under I.ordering.
IdealBasis ideal_sum(const IdealBasis& I, const IdealBasis& J);
/// Intersection with the subring of the variables outside `vars` (bit mask).
IdealBasis eliminate(const IdealBasis& I, unsigned vars);

/// Dimension of the local algebra O/I at the origin for ideals of finite colength.
///
/// Computes standard bases of I + m^D in the truncated ring for growing D and
/// stops once every monomial of degree D-1 lies in the leading ideal, so that
/// m^(D-1) is contained in I by Nakayama.  Returns kInfinite when the colength
/// exceeds `cap` (which includes non-isolated cases).
int local_vdim(const std::vector<Polynomial>& gens, int cap);

/// Local colength of a submodule of O^rank generated by the given vectors
/// (each of length rank), with the same stopping rule; kInfinite beyond cap.
int local_module_vdim(const std::vector<std::vector<Polynomial>>& vectors, int rank, int cap);

/// Krull dimension of O/I at the origin (local ordering, Mora normal form).
int local_krull_dim(const std::vector<Polynomial>& gens);

/// Krull dimension of a monomial ideal in the ambient variables selected by `nvars`.
int monomial_krull_dim(const std::vector<Monomial>& lead, int nvars);

}  // namespace icis
