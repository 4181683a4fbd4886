#include "icis/series.hpp"

#include "icis/errors.hpp"
#include "linalg.hpp"

namespace icis {

Polynomial translate(const Polynomial& f, const std::vector<Rational>& p, int n) {
  SubstitutionMap m;
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p[v] != 0) m.set(static_cast<int>(v), Polynomial::variable(static_cast<int>(v)) + Polynomial(p[v]));
  return m.apply_truncated(f, n);
}

Polynomial implicit_solve(const Polynomial& g, int var, int n) {
  Rational c = g.coefficient(Monomial::variable(var));
  if (c == 0) throw Error(ErrorKind::InternalInconsistency, "implicit_solve: vanishing derivative");
  // phi <- phi - g(phi)/c gains one order of accuracy per step.
  Polynomial phi;
  Rational inv = 1 / c;
  for (int prec = 1; prec <= n; ++prec) {
    SubstitutionMap m;
    m.set(var, phi);
    Polynomial r = m.apply_truncated(g, prec);
    phi -= r * inv;
    phi = jet(phi, prec);
  }
  return phi;
}

std::vector<Polynomial> solve_critical(const Polynomial& h, const std::vector<int>& vars, int n) {
  const int k = static_cast<int>(vars.size());
  std::vector<Polynomial> grad;
  for (int v : vars) grad.push_back(h.derivative(v));
  linalg::Matrix H(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) H[i][j] = grad[i].derivative(vars[j]).constant_term();
  // Inverse of H by row reduction of [H | I].
  linalg::Matrix aug(k, std::vector<Rational>(2 * k, Rational(0)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = H[i][j];
    aug[i][k + i] = 1;
  }
  auto piv = linalg::row_reduce(aug);
  if (static_cast<int>(piv.size()) < k || piv.back() >= k)
    throw Error(ErrorKind::InternalInconsistency, "solve_critical: singular Hessian");
  std::vector<Polynomial> u(k);
  for (int prec = 1; prec <= n; ++prec) {
    SubstitutionMap m;
    for (int i = 0; i < k; ++i) m.set(vars[i], u[i]);
    std::vector<Polynomial> r(k);
    for (int i = 0; i < k; ++i) r[i] = m.apply_truncated(grad[i], prec);
    for (int i = 0; i < k; ++i) {
      Polynomial delta;
      for (int j = 0; j < k; ++j)
        if (aug[i][k + j] != 0) delta += r[j] * aug[i][k + j];
      u[i] = jet(u[i] - delta, prec);
    }
  }
  return u;
}

Polynomial compact_variables(const Polynomial& f, const std::vector<int>& vars) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t k = 0; k < vars.size(); ++k) m.set(static_cast<int>(k), t.mono[vars[k]]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace icis
