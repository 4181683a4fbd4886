#include "icis/germ.hpp"

#include <optional>
#include <stdexcept>

#include "icis/errors.hpp"
#include "icis/series.hpp"
#include "linalg.hpp"

namespace icis {

int GermType::milnor() const {
  switch (kind) {
    case GermKind::Smooth: return 0;
    case GermKind::A:
    case GermKind::D:
    case GermKind::E: return k;
    case GermKind::J: return 6 * k + 4 + i;
    case GermKind::Other: return -1;
  }
  return -1;
}

std::string GermType::to_string() const {
  switch (kind) {
    case GermKind::Smooth: return "Smooth";
    case GermKind::A: return "A" + std::to_string(k);
    case GermKind::D: return "D" + std::to_string(k);
    case GermKind::E: return "E" + std::to_string(k);
    case GermKind::J: return "J" + std::to_string(k) + "," + std::to_string(i);
    case GermKind::Other: return "Other";
  }
  return "Other";
}

GermType parse_germ_type(const std::string& s) {
  if (s == "Smooth") return GermType::smooth();
  if (s == "Other") return GermType::other();
  auto bad = [&] { return Error(ErrorKind::InvalidInput, "unknown germ type: " + s); };
  if (s.size() < 2) throw bad();
  try {
    std::string rest = s.substr(1);
    if (s[0] == 'J') {
      auto comma = rest.find(',');
      if (comma == std::string::npos) throw bad();
      return GermType::J(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
    }
    int k = std::stoi(rest);
    if (s[0] == 'A') return GermType::A(k);
    if (s[0] == 'D') return GermType::D(k);
    if (s[0] == 'E') return GermType::E(k);
  } catch (const std::logic_error&) {
  }
  throw bad();
}

namespace {

Polynomial var(int v) { return Polynomial::variable(v); }

// Root structure of a binary cubic a x^3 + b x^2 y + c x y^2 + d y^3: 3 distinct, 2 (double root), 1 (triple).
int cubic_distinct_roots(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Rational disc = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
  if (disc != 0) return 3;
  bool hessian_zero = b * b - 3 * a * c == 0 && b * c - 9 * a * d == 0 && c * c - 3 * b * d == 0;
  return hessian_zero ? 1 : 2;
}

Rational coeff(const Polynomial& f, int ex, int ey) {
  Monomial m;
  m.set(0, ex);
  m.set(1, ey);
  return f.coefficient(m);
}

// Two-variable germ r(x,y) of order 3 with Milnor number mu, precision n.
GermType classify_corank_two(Polynomial r, int mu, int n) {
  Rational a = coeff(r, 3, 0), b = coeff(r, 2, 1), c = coeff(r, 1, 2), d = coeff(r, 0, 3);
  int roots = cubic_distinct_roots(a, b, c, d);
  if (roots == 3) return GermType::D(4);
  if (roots == 2) return GermType::D(mu);
  // Move the triple root to x^3.
  SubstitutionMap m;
  if (a != 0) {
    m.set(0, var(0) - var(1) * (b / (3 * a)));
  } else {
    m.set(0, var(1));
    m.set(1, var(0));
  }
  r = m.apply_truncated(r, n);
  r = r * (1 / coeff(r, 3, 0));
  for (int k = 1; 3 * k + 2 <= n && 6 * k - 2 <= mu; ++k) {
    if (k > 1) {
      Rational al = coeff(r, 2, k), be = coeff(r, 1, 2 * k), ga = coeff(r, 0, 3 * k);
      int rk = cubic_distinct_roots(Rational(1), al, be, ga);
      if (rk == 3) return GermType::J(k - 1, 0);
      if (rk == 2) return GermType::J(k - 1, mu - (6 * k - 2));
      if (al != 0) {
        SubstitutionMap s;
        s.set(0, var(0) - Polynomial::variable(1, k) * (al / 3));
        r = s.apply_truncated(r, n);
      }
    }
    if (coeff(r, 0, 3 * k + 1) != 0) return GermType::E(6 * k);
    if (coeff(r, 1, 2 * k + 1) != 0) return GermType::E(6 * k + 1);
    if (coeff(r, 0, 3 * k + 2) != 0) return GermType::E(6 * k + 2);
  }
  return GermType::other();
}

linalg::Matrix hessian(const Polynomial& h, int m) {
  linalg::Matrix H(m, std::vector<Rational>(m, Rational(0)));
  Polynomial q = h.homogeneous_part(2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) H[i][j] = q.derivative(i).derivative(j).constant_term();
  return H;
}

// Splitting lemma: residual two-variable germ of a corank-two h in m variables.
Polynomial residual(const Polynomial& h, int m, int n) {
  linalg::Matrix H = hessian(h, m);
  auto ker = linalg::kernel(H, m);
  // Columns: complement of the kernel, then the kernel vectors.
  std::vector<std::vector<Rational>> cols;
  linalg::Matrix span = ker;
  for (int e = 0; e < m && static_cast<int>(cols.size()) + 2 < m; ++e) {
    std::vector<Rational> v(m, Rational(0));
    v[e] = 1;
    linalg::Matrix trial = span;
    trial.push_back(v);
    if (linalg::rank(trial) > linalg::rank(span)) {
      span = trial;
      cols.push_back(v);
    }
  }
  for (auto& k : ker) cols.push_back(k);
  SubstitutionMap t;
  for (int i = 0; i < m; ++i) {
    Polynomial img;
    for (int j = 0; j < m; ++j)
      if (cols[j][i] != 0) img += var(j) * cols[j][i];
    t.set(i, img);
  }
  Polynomial g = t.apply_truncated(h, n);
  std::vector<int> u;
  for (int i = 0; i + 2 < m; ++i) u.push_back(i);
  auto psi = solve_critical(g, u, n);
  SubstitutionMap s;
  for (std::size_t i = 0; i < u.size(); ++i) s.set(u[i], psi[i]);
  Polynomial r = s.apply_truncated(g, n);
  return compact_variables(r, {m - 2, m - 1});
}

// nullopt: more precision needed.
std::optional<GermType> classify_at(const Polynomial& h, int m, int n, int cap, int& wanted) {
  const bool exhausted = n >= cap + 2;
  int ord = order(h);
  if (ord == 0) throw Error(ErrorKind::InvalidInput, "point does not lie on the germ");
  if (ord == 1) return GermType::smooth();
  if (ord == kInfinite) {
    if (exhausted) throw Error(ErrorKind::NotIsolated, "germ vanishes identically");
    wanted = n + n / 2 + 2;
    return std::nullopt;
  }
  int mu;
  try {
    mu = milnor_hyp(h, m, cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotIsolated || exhausted) throw;
    wanted = n + n / 2 + 2;
    return std::nullopt;
  }
  if (mu + 2 > n && !exhausted) {
    wanted = mu + 2;
    return std::nullopt;
  }
  int cr = m - linalg::rank(hessian(h, m));
  if (cr <= 1) return GermType::A(mu);
  if (cr > 2) return GermType::other();
  Polynomial r = m == 2 ? h : residual(h, m, n);
  if (order(r) != 3) return GermType::other();
  return classify_corank_two(r, mu, n);
}

template <class Make>
GermType drive(Make&& make, int cap) {
  int n = 12;
  for (;;) {
    int wanted = n;
    int m = 0;
    Polynomial h;
    if (!make(n, h, m)) return GermType::other();
    if (auto t = classify_at(h, m, n, cap, wanted)) return *t;
    n = std::min(std::max(wanted, n + 1), cap + 2);
  }
}

}  // namespace

GermType classify_hypersurface(const Polynomial& f, int nvars, int cap) {
  return drive(
      [&](int n, Polynomial& h, int& m) {
        h = jet(f, n);
        m = nvars;
        return true;
      },
      cap);
}

GermType classify_germ(const std::vector<Polynomial>& gens, int nvars, const std::vector<Rational>& point, int cap) {
  return drive(
      [&](int n, Polynomial& h, int& m) {
        std::vector<Polynomial> g;
        for (const auto& f : gens) {
          Polynomial t = translate(f, point, n);
          if (t.constant_term() != 0) throw Error(ErrorKind::InvalidInput, "point does not lie on the germ");
          if (!t.is_zero()) g.push_back(std::move(t));
        }
        std::vector<int> vars;
        for (int v = 0; v < nvars; ++v) vars.push_back(v);
        while (g.size() > 1) {
          int pick = -1, pv = -1;
          for (std::size_t i = 0; i < g.size() && pick < 0; ++i)
            for (int v : vars)
              if (g[i].coefficient(Monomial::variable(v)) != 0) {
                pick = static_cast<int>(i);
                pv = v;
                break;
              }
          if (pick < 0) return false;
          Polynomial phi = implicit_solve(g[pick], pv, n);
          g.erase(g.begin() + pick);
          SubstitutionMap s;
          s.set(pv, phi);
          for (auto& f : g) f = s.apply_truncated(f, n);
          std::erase(vars, pv);
        }
        h = g.empty() ? Polynomial() : compact_variables(g.front(), vars);
        m = static_cast<int>(vars.size());
        return true;
      },
      cap);
}

}  // namespace icis
