#pragma once

// Internal standard-basis engine over primitive integer polynomials.

#include <vector>

#include "icis/ordering.hpp"
#include "icis/polynomial.hpp"

namespace icis::engine {

struct ETerm {
  Monomial m;
  Integer c;
};

/// Terms sorted descending under the engine's ordering.  Kept primitive with
/// positive leading coefficient except transiently during reduction.
using EPoly = std::vector<ETerm>;

struct Options {
  OrderingTag order;
  /// Drop every term of total degree >= truncate (0 = no truncation).
  /// Only meaningful for local orderings, where this computes in k[x]/m^D.
  int truncate = 0;
  /// Module mode: slot 7 carries the component, product criterion disabled.
  bool module = false;
  /// Tail-reduce the final basis.
  bool reduce = true;
};

EPoly from_polynomial(const Polynomial& f, const Options& opt, int component = 0);
Polynomial to_polynomial(const EPoly& p);

void sort_terms(EPoly& p, const OrderingTag& order);
void make_primitive(EPoly& p);

/// Standard basis of the ideal / submodule generated by `gens`.
/// The result is minimal, primitive and (if opt.reduce) reduced.
std::vector<EPoly> standard_basis(std::vector<EPoly> gens, const Options& opt);

/// Full normal form of f with respect to a standard basis G (global or truncated orders),
/// or a Mora weak normal form for untruncated local orders (zero iff f is in the ideal).
EPoly normal_form(EPoly f, const std::vector<EPoly>& G, const Options& opt);

/// Exact remainder of f (no rescaling) for global or truncated orders.
Polynomial exact_normal_form(const Polynomial& f, const std::vector<EPoly>& G, const Options& opt);

}  // namespace icis::engine
