#include "icis/ordering.hpp"

namespace icis {

int revlex_compare(Monomial a, Monomial b, int nvars) {
  for (int i = nvars - 1; i >= 0; --i) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

namespace {

int degree_upto(Monomial m, int nvars) {
  int d = 0;
  for (int i = 0; i < nvars; ++i) d += m[i];
  return d;
}

int compare_terms(const OrderingTag& o, Monomial a, Monomial b) {
  switch (o.kind) {
    case OrderKind::LocalDegRevLex: {
      int da = degree_upto(a, o.nvars), db = degree_upto(b, o.nvars);
      if (da != db) return da < db ? 1 : -1;
      return revlex_compare(a, b, o.nvars);
    }
    case OrderKind::GradedDegRevLex: {
      int da = degree_upto(a, o.nvars), db = degree_upto(b, o.nvars);
      if (da != db) return da > db ? 1 : -1;
      return revlex_compare(a, b, o.nvars);
    }
    case OrderKind::Lex: {
      for (int i = 0; i < o.nvars; ++i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::Elimination: {
      int da = a.degree_in(o.elim_block), db = b.degree_in(o.elim_block);
      if (da != db) return da > db ? 1 : -1;
      for (int i = o.nvars - 1; i >= 0; --i) {
        if (!(o.elim_block & (1u << i))) continue;
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? 1 : -1;
      }
      unsigned rest = ((1u << o.nvars) - 1) & ~o.elim_block;
      int ra = a.degree_in(rest), rb = b.degree_in(rest);
      if (ra != rb) return ra > rb ? 1 : -1;
      for (int i = o.nvars - 1; i >= 0; --i) {
        if (!(rest & (1u << i))) continue;
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace

int OrderingTag::compare(Monomial a, Monomial b) const {
  if (position_over_term && a.component() != b.component()) return a.component() < b.component() ? 1 : -1;
  return compare_terms(*this, a, b);
}

std::string OrderingTag::name() const {
  std::string s;
  switch (kind) {
    case OrderKind::LocalDegRevLex: s = "ds"; break;
    case OrderKind::GradedDegRevLex: s = "dp"; break;
    case OrderKind::Lex: s = "lp"; break;
    case OrderKind::Elimination: s = "elim"; break;
  }
  if (position_over_term) s = "c," + s;
  return s;
}

}  // namespace icis
