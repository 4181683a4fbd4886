#include "quadric.hpp"

#include "icis/errors.hpp"

namespace icis::quadric {

namespace {

constexpr int n = kAmbientVars;

// a + b sqrt(d) for a fixed non-square d.
struct Surd {
  Rational a, b;
  bool is_zero() const { return a == 0 && b == 0; }
};

Surd mul(const Surd& x, const Surd& y, const Rational& d) { return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a}; }

Surd inv(const Surd& x, const Rational& d) {
  Rational norm = x.a * x.a - d * x.b * x.b;
  return {x.a / norm, -x.b / norm};
}

bool surd_determinant_is_zero(std::vector<std::vector<Surd>> m, const Rational& d) {
  const std::size_t k = m.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m[p][c].is_zero()) ++p;
    if (p == k) return true;
    std::swap(m[p], m[c]);
    Surd piv = inv(m[c][c], d);
    for (std::size_t i = c + 1; i < k; ++i) {
      if (m[i][c].is_zero()) continue;
      Surd f = mul(m[i][c], piv, d);
      for (std::size_t j = c; j < k; ++j) {
        Surd t = mul(f, m[c][j], d);
        m[i][j].a -= t.a;
        m[i][j].b -= t.b;
      }
    }
  }
  return false;
}

Polynomial row_form(const linalg::Matrix& m, int i) { return linear_form(m[i]); }

}  // namespace

linalg::Matrix matrix_of(const Polynomial& q) {
  linalg::Matrix m(n, Vector(n, Rational(0)));
  for (const auto& t : q.terms()) {
    if (t.mono.degree() != 2) throw Error(ErrorKind::InvalidInput, "expected a quadratic form");
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      for (int e = 0; e < t.mono[v]; ++e) vars.push_back(v);
    if (vars.size() != 2) throw Error(ErrorKind::InvalidInput, "expected a form in x, y, z, w");
    if (vars[0] == vars[1]) {
      m[vars[0]][vars[0]] = t.coeff;
    } else {
      m[vars[0]][vars[1]] = t.coeff / 2;
      m[vars[1]][vars[0]] = t.coeff / 2;
    }
  }
  return m;
}

Polynomial form_of(const linalg::Matrix& m) {
  std::vector<Term> terms;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational c = i == j ? m[i][i] : m[i][j] + m[j][i];
      if (c == 0) continue;
      Monomial mono;
      mono.set(i, i == j ? 2 : 1);
      if (i != j) mono.set(j, 1);
      terms.push_back({mono, c});
    }
  return Polynomial::from_terms(std::move(terms));
}

Vector coefficients_of_linear(const Polynomial& l) {
  Vector a(n, Rational(0));
  for (const auto& t : l.terms()) {
    if (t.mono.degree() != 1) throw Error(ErrorKind::InvalidInput, "expected a linear form");
    for (int v = 0; v < n; ++v)
      if (t.mono[v]) a[v] = t.coeff;
  }
  return a;
}

Polynomial linear_form(const Vector& a) {
  Polynomial l;
  for (int v = 0; v < n; ++v)
    if (a[v] != 0) l += Polynomial::variable(v) * a[v];
  return l;
}

Polynomial restrict_to_hyperplane(const Polynomial& q, const Polynomial& l) {
  Vector a = coefficients_of_linear(l);
  int p = 0;
  while (a[p] == 0) ++p;
  Polynomial image;
  for (int v = 0; v < n; ++v)
    if (v != p && a[v] != 0) image -= Polynomial::variable(v) * (a[v] / a[p]);
  SubstitutionMap s;
  s.set(p, image);
  return s.apply(q);
}

Factorization factor(const linalg::Matrix& m) {
  Factorization f;
  f.rank = linalg::rank(m);
  if (f.rank > 2) throw Error(ErrorKind::InvalidInput, "quadratic form of rank above 2 does not factor");
  if (f.rank == 0) return f;
  if (f.rank == 1) {
    int i = 0;
    while (m[i][i] == 0) ++i;
    f.rational = true;
    f.l1 = row_form(m, i) * Rational(1 / m[i][i]);
    f.l2 = row_form(m, i);
    return f;
  }
  int i1 = -1, i2 = -1;
  for (int i = 0; i < n && i1 < 0; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][i] * m[j][j] - m[i][j] * m[j][i] != 0) {
        i1 = i;
        i2 = j;
        break;
      }
  // q = u^T N^-1 u with u = (row i1, row i2) . x
  Rational det = m[i1][i1] * m[i2][i2] - m[i1][i2] * m[i2][i1];
  Rational c11 = m[i2][i2] / det, c12 = -m[i1][i2] / det, c22 = m[i1][i1] / det;
  Polynomial u1 = row_form(m, i1), u2 = row_form(m, i2);
  if (c11 == 0) {
    f.rational = true;
    f.l1 = u2;
    f.l2 = u1 * Rational(2 * c12) + u2 * c22;
    return f;
  }
  Rational disc = c12 * c12 - c11 * c22;
  if (auto r = rational_sqrt(disc)) {
    f.rational = true;
    f.l1 = (u1 - u2 * Rational((-c12 + *r) / c11)) * c11;
    f.l2 = u1 - u2 * Rational((-c12 - *r) / c11);
    return f;
  }
  f.disc = disc;
  f.a.assign(n, Rational(0));
  f.b.assign(n, Rational(0));
  for (int v = 0; v < n; ++v) {
    f.a[v] = m[i1][v] + c12 / c11 * m[i2][v];
    f.b[v] = -m[i2][v] / c11;
  }
  return f;
}

UPoly pencil_determinant(const linalg::Matrix& a, const linalg::Matrix& b) {
  const std::size_t k = a.size();
  std::vector<Rational> xs, ys;
  for (std::size_t s = 0; s <= k; ++s) {
    linalg::Matrix m = b;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] += Rational(static_cast<long>(s)) * a[i][j];
    xs.push_back(static_cast<long>(s));
    ys.push_back(linalg::determinant(std::move(m)));
  }
  return interpolate(xs, ys);
}

bool degenerate_on_conjugate_plane(const linalg::Matrix& m, const Vector& a, const Vector& b, const Rational& d) {
  // Bordered matrix [[M, l], [l^T, 0]] is singular iff M restricted to l = 0 is.
  std::vector<std::vector<Surd>> big(n + 1, std::vector<Surd>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) big[i][j] = {m[i][j], 0};
    big[i][n] = {a[i], b[i]};
    big[n][i] = {a[i], b[i]};
  }
  return surd_determinant_is_zero(std::move(big), d);
}

UPoly restrict_to_line(const Polynomial& f, const Vector& k1, const Vector& k2) {
  const int deg = f.degree();
  std::vector<Rational> xs, ys;
  for (int s = 0; s <= deg; ++s) {
    Vector p(n);
    for (int v = 0; v < n; ++v) p[v] = Rational(s) * k1[v] + k2[v];
    xs.push_back(s);
    ys.push_back(f.evaluate(p));
  }
  UPoly out = interpolate(xs, ys);
  out.resize(deg + 1, Rational(0));
  return out;
}

int common_points_on_line(const std::vector<Polynomial>& forms, const Vector& k1, const Vector& k2) {
  UPoly g;
  bool at_infinity = true, any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    UPoly r = restrict_to_line(f, k1, k2);
    if (r.back() != 0) at_infinity = false;
    trim(r);
    if (r.empty()) continue;
    any = true;
    g = gcd(g, r);
  }
  if (!any) throw Error(ErrorKind::InvalidInput, "line lies on every form");
  return degree(squarefree_part(g)) + (at_infinity ? 1 : 0);
}

}  // namespace icis::quadric
