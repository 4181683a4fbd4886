#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "icis/ideal.hpp"
#include "icis/invariants.hpp"
#include "icis/singularity_type.hpp"

namespace icis {

/// Modulus used wherever a normal form needs a generic lambda.
inline const Rational kDefaultLambda = 2;

/// l_i(a, b) = a b^q for i = 2q, b^(q+2) for i = 2q+1.
Polynomial l_poly(int i, const Polynomial& a, const Polynomial& b);

/// Generators of the tabulated normal form.  lambda is only accepted for types
/// with has_modulus().  Throws IndexOutOfRange, ExcludedModulus, or
/// UnknownNormalForm (L^b and L_{1,i}, which have no tabulated form).
IdealBasis normal_form(const SingularityType& t, std::optional<Rational> lambda = std::nullopt);

/// Tabulated (mu, tau) of a type, with the known misprints corrected
/// (L_{1,0}: mu = 13; L_{15}: tau = 15).  Throws IndexOutOfRange.
InvariantRecord table_invariants(const SingularityType& t);

/// The fixed grid of types used by the table and round-trip checks.
std::vector<SingularityType> acceptance_grid();
std::vector<SingularityType> acceptance_grid(Family f);

using Matrix4 = std::array<std::array<Rational, kAmbientVars>, kAmbientVars>;

/// Invertible integer matrix with entries in -3..3, a pure function of seed
/// (mt19937_64 stream, entry = next % 7 - 3, redrawn while singular).  seed = -1
/// gives the identity.
Matrix4 random_matrix(std::int64_t seed);
SubstitutionMap random_linear_change(std::int64_t seed);

/// The generators of I pulled back along m.
IdealBasis apply(const SubstitutionMap& m, const IdealBasis& I);

}  // namespace icis
