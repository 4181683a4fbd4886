#pragma once

#include <cstdint>

#include "icis/polynomial.hpp"

namespace icis {

/// Default bound on Milnor numbers handled by the local computations.
inline constexpr int kDefaultMuCap = 40;

struct InvariantRecord {
  int mu = 0;
  int tau = 0;
  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Milnor number of the ICIS V(f,g) at the origin (Le-Greuel formula with a
/// random combination h = a f + b g, coefficients drawn from {-7..7}\{0}).
/// Throws NotIsolated / NotCompleteIntersection.
int milnor_icis(const Polynomial& f, const Polynomial& g, int cap = kDefaultMuCap, std::uint64_t seed = 0);

/// Tjurina number: colength of J O^4 + I O^2 in O^2.  Throws NotIsolated.
int tjurina_icis(const Polynomial& f, const Polynomial& g, int cap = kDefaultMuCap);

/// Hypersurface Milnor / Tjurina numbers in the first `nvars` variables
/// (remaining ambient variables are ignored).  Throws NotIsolated.
int milnor_hyp(const Polynomial& f, int nvars = 4, int cap = kDefaultMuCap);
int tjurina_hyp(const Polynomial& f, int nvars = 4, int cap = kDefaultMuCap);

/// Rank of the Hessian at the origin in the first `nvars` variables.
int hessian_rank(const Polynomial& f, int nvars = 4);
/// nvars minus the Hessian rank.
int corank(const Polynomial& f, int nvars = 4);

/// Both invariants with the mu >= tau sanity check (InternalInconsistency otherwise).
InvariantRecord icis_invariants(const Polynomial& f, const Polynomial& g, int cap = kDefaultMuCap,
                                std::uint64_t seed = 0);

}  // namespace icis
