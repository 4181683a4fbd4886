#include "icis/blowup.hpp"

#include <algorithm>
#include <array>

#include "icis/errors.hpp"
#include "icis/ideal.hpp"
#include "icis/series.hpp"
#include "icis/univariate.hpp"
#include "linalg.hpp"

namespace icis {

namespace {

Polynomial divide_by_power(const Polynomial& f, int var, int e) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set(var, m[var] - e);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial dehomogenize(const Polynomial& f, int var) {
  SubstitutionMap s;
  s.set(var, Polynomial(1L));
  return s.apply(f);
}

std::vector<Polynomial> minors(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial> out;
  for (int i = 0; i < kAmbientVars; ++i)
    for (int j = i + 1; j < kAmbientVars; ++j) {
      Polynomial m = a.derivative(i) * b.derivative(j) - a.derivative(j) * b.derivative(i);
      if (!m.is_zero()) out.push_back(std::move(m));
    }
  return out;
}


std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lead) {
  // Bounded by the pure powers, which exist for a zero-dimensional ideal.
  std::array<int, kAmbientVars> bound{};
  for (int v = 0; v < kAmbientVars; ++v) {
    bound[v] = 0;
    for (auto l : lead)
      if (l.support() == (1u << v) && (bound[v] == 0 || l[v] < bound[v])) bound[v] = l[v];
  }
  std::vector<Monomial> out;
  Monomial m;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == kAmbientVars) {
      for (auto l : lead)
        if (l.divides(m)) return;
      out.push_back(m);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      self(self, v + 1);
    }
    m.set(v, 0);
  };
  rec(rec, 0);
  return out;
}

linalg::Matrix multiplication_matrix(const IdealBasis& G, const std::vector<Monomial>& basis, const Polynomial& f) {
  const int n = static_cast<int>(basis.size());
  linalg::Matrix M(n, std::vector<Rational>(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    Polynomial r = normal_form(G, f * Polynomial::monomial(basis[j]));
    for (int i = 0; i < n; ++i) M[i][j] = r.coefficient(basis[i]);
  }
  return M;
}

// Characteristic polynomial det(t I - M) by interpolation at t = 0..n.
UPoly charpoly(const linalg::Matrix& M) {
  const int n = static_cast<int>(M.size());
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= n; ++t) {
    linalg::Matrix A = M;
    for (int i = 0; i < n; ++i) {
      for (auto& e : A[i]) e = -e;
      A[i][i] += t;
    }
    xs.push_back(t);
    ys.push_back(linalg::determinant(std::move(A)));
  }
  return interpolate(xs, ys);
}

Polynomial initial_form(const Polynomial& f) { return f.homogeneous_part(order(f)); }

int jacobian_rank_at(const Polynomial& a, const Polynomial& b, const std::vector<Rational>& p) {
  linalg::Matrix J(2, std::vector<Rational>(kAmbientVars, Rational(0)));
  for (int v = 0; v < kAmbientVars; ++v) {
    J[0][v] = a.derivative(v).evaluate(p);
    J[1][v] = b.derivative(v).evaluate(p);
  }
  return linalg::rank(std::move(J));
}

bool leading_before(const std::vector<Rational>& p, int chart) {
  for (int j = 0; j < chart; ++j)
    if (p[j] != 0) return true;
  return false;
}

// Singular points of V(q1,q2) in chart i, as affine points with p[i] = 1.
std::vector<std::vector<Rational>> curve_points(const Polynomial& q1, const Polynomial& q2, int chart) {
  std::vector<Polynomial> gens{dehomogenize(q1, chart), dehomogenize(q2, chart)};
  for (auto& m : minors(q1, q2)) {
    Polynomial d = dehomogenize(m, chart);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  std::vector<int> vars;
  for (int v = 0; v < kAmbientVars; ++v)
    if (v != chart) vars.push_back(v);
  auto pts = rational_points(gens, vars);
  std::vector<std::vector<Rational>> out;
  for (auto& p : pts) {
    p[chart] = 1;
    if (!leading_before(p, chart)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Polynomial chart_pullback(const Polynomial& f, int chart) {
  SubstitutionMap s;
  for (int j = 0; j < kAmbientVars; ++j)
    if (j != chart) s.set(j, Polynomial::variable(chart) * Polynomial::variable(j));
  return s.apply(f);
}

Polynomial strict_transform(const Polynomial& f, int chart) {
  return divide_by_power(chart_pullback(f, chart), chart, order(f));
}

std::vector<std::vector<Rational>> rational_points(const std::vector<Polynomial>& gens, std::vector<int> vars) {
  std::vector<Polynomial> sys;
  for (const auto& g : gens)
    if (!g.is_zero()) sys.push_back(g);
  for (int v = 0; v < kAmbientVars; ++v)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) sys.push_back(Polynomial::variable(v));
  IdealBasis G = standard_basis(sys, OrderingTag::graded());
  if (G.is_unit()) return {};
  if (vdim(G) == kInfinite) throw Error(ErrorKind::PositiveDimensionalSingularLocus, "positive dimensional solution set");
  auto lead = G.leading_monomials();
  std::vector<Monomial> basis = standard_monomials(lead);
  // Rational eigenvalues of multiplication by each coordinate.
  std::vector<std::vector<Rational>> values(kAmbientVars);
  for (int v : vars) values[v] = rational_roots(squarefree_part(charpoly(multiplication_matrix(G, basis, Polynomial::variable(v)))));
  // A generic linear form separates the points; its distinct eigenvalues count them.
  Polynomial sep;
  int c = 1;
  for (int v : vars) {
    sep += Polynomial::variable(v) * Rational(c);
    c = 3 * c + 1;
  }
  const int distinct = degree(squarefree_part(charpoly(multiplication_matrix(G, basis, sep))));
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> p(kAmbientVars, Rational(0));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == vars.size()) {
      for (const auto& g : G.basis())
        if (g.evaluate(p) != 0) return;
      out.push_back(p);
      return;
    }
    for (const auto& r : values[vars[k]]) {
      p[vars[k]] = r;
      self(self, k + 1);
    }
    p[vars[k]] = 0;
  };
  rec(rec, 0);
  if (static_cast<int>(out.size()) < distinct)
    throw Error(ErrorKind::IrrationalSingularPoint, "singular point with irrational coordinates");
  return out;
}

std::vector<SingularPoint> curve_singularities(const Polynomial& q1, const Polynomial& q2, int cap) {
  std::vector<SingularPoint> out;
  for (int chart = 0; chart < kAmbientVars; ++chart) {
    std::vector<int> vars;
    for (int v = 0; v < kAmbientVars; ++v)
      if (v != chart) vars.push_back(v);
    Polynomial a = compact_variables(dehomogenize(q1, chart), vars);
    Polynomial b = compact_variables(dehomogenize(q2, chart), vars);
    for (auto& p : curve_points(q1, q2, chart)) {
      std::vector<Rational> local;
      for (int v : vars) local.push_back(p[v]);
      out.push_back({chart, p, classify_germ({a, b}, 3, local, cap)});
    }
  }
  return out;
}

BlowupReport blowup(const Polynomial& f, const Polynomial& g, int cap) {
  Polynomial q1 = initial_form(f), q2 = initial_form(g);
  if (krull_dim(standard_basis({q1, q2}, OrderingTag::graded())) != 2)
    throw Error(ErrorKind::UnsupportedTwoJet, "initial forms do not cut out a curve");
  BlowupReport r;
  for (int chart = 0; chart < kAmbientVars; ++chart) {
    Polynomial ft = strict_transform(f, chart), gt = strict_transform(g, chart);
    for (auto& p : curve_points(q1, q2, chart)) {
      // Chart coordinates: x_chart = 0 on E, x_j = p_j / p_chart = p_j.
      std::vector<Rational> c = p;
      c[chart] = 0;
      if (jacobian_rank_at(ft, gt, c) == 2) continue;
      GermType t = classify_germ({ft, gt}, kAmbientVars, c, cap);
      r.points.push_back({chart, c, t});
      r.types.push_back(t);
    }
  }
  std::sort(r.types.begin(), r.types.end());
  return r;
}

}  // namespace icis
