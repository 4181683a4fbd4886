#include "icis/ideal.hpp"

#include <algorithm>

#include "engine.hpp"
#include "icis/errors.hpp"

namespace icis {

namespace {

engine::Options options_for(const OrderingTag& ord) {
  engine::Options o;
  o.order = ord;
  return o;
}

std::vector<engine::EPoly> to_engine(const std::vector<Polynomial>& gens, const engine::Options& opt) {
  std::vector<engine::EPoly> out;
  for (const auto& g : gens) {
    engine::EPoly p = engine::from_polynomial(g, opt);
    if (!p.empty()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Polynomial> from_engine(const std::vector<engine::EPoly>& basis) {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& p : basis) out.push_back(engine::to_polynomial(p));
  return out;
}

// Calls visit(m) for every monomial in the first nvars slots of degree < bound.
template <class F>
void for_each_monomial(int nvars, int bound, F&& visit) {
  Monomial m;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      visit(m);
      return;
    }
    for (int e = 0; e < remaining; ++e) {
      m.set(var, e);
      self(self, var + 1, remaining - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, bound);
}

bool divisible_by_any(Monomial m, const std::vector<Monomial>& lead) {
  for (auto l : lead)
    if (l.divides(m)) return true;
  return false;
}

// Counts standard monomials of degree < D per component; reports whether degree D-1 is fully covered.
struct TruncatedCount {
  long count = 0;
  bool top_degree_covered = true;
};

TruncatedCount count_truncated(const std::vector<Monomial>& lead, int nvars, int D, int components) {
  TruncatedCount r;
  for (int c = (components ? 1 : 0); c <= components; ++c) {
    std::vector<Monomial> lc;
    for (auto l : lead)
      if (l.component() == c) lc.push_back(l);
    for_each_monomial(nvars, D, [&](Monomial m) {
      Monomial mc = c ? m.with_component(c) : m;
      if (divisible_by_any(mc, lc)) return;
      ++r.count;
      if (m.degree() == D - 1) r.top_degree_covered = false;
    });
  }
  return r;
}

int next_degree(int D) { return D + std::max(2, D / 3); }

// Shared driver for local_vdim and local_module_vdim.
template <class Build>
int truncated_colength(Build&& build, int nvars, int components, int cap) {
  // keep every exponent below the packed limit
  cap = std::min(cap, 120);
  int D = std::min(cap + 2, 6);
  for (;;) {
    engine::Options opt;
    opt.order = OrderingTag::local(nvars);
    opt.order.position_over_term = components > 0;
    opt.truncate = D;
    opt.module = components > 0;
    opt.reduce = false;
    auto basis = engine::standard_basis(build(opt), opt);
    std::vector<Monomial> lead;
    for (const auto& p : basis) {
      if (p.front().m.is_one() && components == 0) return 0;
      lead.push_back(p.front().m);
    }
    TruncatedCount tc = count_truncated(lead, nvars, D, components);
    if (tc.count > cap) return kInfinite;
    if (tc.top_degree_covered) return static_cast<int>(tc.count);
    if (D >= cap + 2) return kInfinite;
    D = std::min(next_degree(D), cap + 2);
  }
}

}  // namespace

const std::vector<Polynomial>& IdealBasis::basis() const {
  if (!completed) throw Error(ErrorKind::InvalidInput, "ideal basis has not been completed");
  return *completed;
}

Monomial leading_monomial(const Polynomial& f, const OrderingTag& order) {
  Monomial best = f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, best) > 0) best = t.mono;
  return best;
}

std::vector<Monomial> IdealBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : basis()) out.push_back(leading_monomial(p, ordering));
  return out;
}

bool IdealBasis::is_unit() const {
  for (auto m : leading_monomials())
    if (m.is_one()) return true;
  return false;
}

IdealBasis standard_basis(const IdealBasis& I) {
  if (I.completed) return I;
  engine::Options opt = options_for(I.ordering);
  IdealBasis r = I;
  r.completed = from_engine(engine::standard_basis(to_engine(I.generators, opt), opt));
  return r;
}

int vdim(const IdealBasis& I) {
  auto lead = I.leading_monomials();
  const int n = I.ordering.nvars;
  for (auto l : lead)
    if (l.is_one()) return 0;
  int bound = 0;
  for (int v = 0; v < n; ++v) {
    int best = -1;
    for (auto l : lead)
      if (l.support() == (1u << v) && (best < 0 || l[v] < best)) best = l[v];
    if (best < 0) return kInfinite;
    bound += best;
  }
  long count = 0;
  for_each_monomial(n, bound + 1, [&](Monomial m) {
    if (!divisible_by_any(m, lead)) ++count;
  });
  return static_cast<int>(count);
}

int monomial_krull_dim(const std::vector<Monomial>& lead, int nvars) {
  for (auto l : lead)
    if (l.is_one()) return -1;
  int best = 0;
  for (unsigned s = 0; s < (1u << nvars); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (auto l : lead)
      if ((l.support() & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

int krull_dim(const IdealBasis& I) { return monomial_krull_dim(I.leading_monomials(), I.ordering.nvars); }

Polynomial normal_form(const IdealBasis& I, const Polynomial& f) {
  engine::Options opt = options_for(I.ordering);
  auto G = to_engine(I.basis(), opt);
  if (!opt.order.is_local() || opt.truncate) return engine::exact_normal_form(f, G, opt);
  return engine::to_polynomial(engine::normal_form(engine::from_polynomial(f, opt), G, opt));
}

bool contains(const IdealBasis& I, const Polynomial& f) { return f.is_zero() || normal_form(I, f).is_zero(); }

bool ideal_contains(const IdealBasis& I, const IdealBasis& J) {
  const auto& gens = J.completed ? *J.completed : J.generators;
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return contains(I, g); });
}

IdealBasis eliminate(const IdealBasis& I, unsigned vars) {
  OrderingTag elim = OrderingTag::elimination(vars, I.ordering.nvars);
  IdealBasis E = standard_basis(IdealBasis(I.generators, elim));
  std::vector<Polynomial> kept;
  for (const auto& p : E.basis())
    if ((p.support() & vars) == 0) kept.push_back(p);
  return standard_basis(IdealBasis(std::move(kept), I.ordering));
}

IdealBasis saturate(const IdealBasis& I, const Polynomial& f) {
  const int n = I.ordering.nvars;
  if (n >= kMaxVars) throw Error(ErrorKind::InternalInconsistency, "no auxiliary variable left for saturation");
  if (I.ordering.is_local()) throw Error(ErrorKind::InvalidInput, "saturation requires a global ordering");
  std::vector<Polynomial> gens = I.completed ? *I.completed : I.generators;
  gens.push_back(Polynomial::variable(n) * f - Polynomial(1L));
  OrderingTag elim = OrderingTag::elimination(1u << n, n + 1);
  IdealBasis E = standard_basis(IdealBasis(std::move(gens), elim));
  std::vector<Polynomial> kept;
  for (const auto& p : E.basis())
    if ((p.support() & (1u << n)) == 0) kept.push_back(p);
  return standard_basis(IdealBasis(std::move(kept), I.ordering));
}

IdealBasis ideal_sum(const IdealBasis& I, const IdealBasis& J) {
  std::vector<Polynomial> gens = I.completed ? *I.completed : I.generators;
  const auto& more = J.completed ? *J.completed : J.generators;
  gens.insert(gens.end(), more.begin(), more.end());
  return standard_basis(IdealBasis(std::move(gens), I.ordering));
}

int local_vdim(const std::vector<Polynomial>& gens, int cap) {
  int nvars = kAmbientVars;
  return truncated_colength([&](const engine::Options& opt) { return to_engine(gens, opt); }, nvars, 0, cap);
}

int local_module_vdim(const std::vector<std::vector<Polynomial>>& vectors, int rank, int cap) {
  auto build = [&](const engine::Options& opt) {
    std::vector<engine::EPoly> out;
    for (const auto& v : vectors) {
      engine::EPoly p;
      Integer den = 1;
      for (int c = 0; c < rank; ++c)
        for (const auto& t : v[c].terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      for (int c = 0; c < rank; ++c)
        for (const auto& t : v[c].terms()) {
          if (t.mono.degree() >= opt.truncate) continue;
          p.push_back({t.mono.with_component(c + 1), t.coeff.get_num() * (den / t.coeff.get_den())});
        }
      engine::sort_terms(p, opt.order);
      engine::make_primitive(p);
      if (!p.empty()) out.push_back(std::move(p));
    }
    return out;
  };
  return truncated_colength(build, kAmbientVars, rank, cap);
}

int local_krull_dim(const std::vector<Polynomial>& gens) {
  IdealBasis I = standard_basis(IdealBasis(gens, OrderingTag::local()));
  return krull_dim(I);
}

}  // namespace icis
