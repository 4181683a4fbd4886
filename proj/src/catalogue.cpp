#include "icis/catalogue.hpp"

#include <random>

#include "icis/errors.hpp"
#include "linalg.hpp"

namespace icis {

namespace {

const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1), z = Polynomial::variable(2),
                 w = Polynomial::variable(3);

Polynomial p(const Polynomial& v, int e) { return v.pow(e); }

Error out_of_range(const SingularityType& t) {
  return Error(ErrorKind::IndexOutOfRange, "no tabulated type " + t.name());
}

bool shape(const SingularityType& t, std::initializer_list<int> idx) {
  return t.indices == std::vector<int>(idx);
}

// (1,0), (1,0,1), (1,i) rows: returns 0 for (1,0), -1 for (1,0,1), i otherwise.
std::optional<int> series_index(const SingularityType& t) {
  const auto& v = t.indices;
  if (v.size() == 2 && v[0] == 1 && v[1] >= 0) return v[1];
  if (v.size() == 3 && v[0] == 1 && v[1] == 0 && v[2] == 1) return -1;
  return std::nullopt;
}

void check_lambda(const SingularityType& t, const Rational& l, std::initializer_list<Rational> excluded) {
  for (const auto& e : excluded)
    if (l == e) throw Error(ErrorKind::ExcludedModulus, "lambda = " + l.get_str() + " is excluded for " + t.name());
}

// J' exceptional rows: mu = 6m + 9 + r with r in 0..2.
bool jprime_head(int mu, int& m, int& r) {
  if (mu < 15) return false;
  m = (mu - 9) / 6;
  r = (mu - 9) % 6;
  return r <= 2;
}

std::pair<Polynomial, Polynomial> forms(const SingularityType& t, const Rational& lam) {
  const auto& v = t.indices;
  switch (t.family) {
    case Family::I: {
      auto s = series_index(t);
      if (!s) break;
      Polynomial f = x * (y - z) + p(w, 3);
      if (*s == 0) return {f, y * (z - x) + lam * p(w, 3)};
      if (*s == -1) return {f, y * (z - x) + lam * p(w, 3) + p(w, 4)};
      return {f, y * (z - x) + p(w, 2) * l_poly(*s - 1, x, w)};
    }
    case Family::T: {
      if (v.size() != 4) break;
      for (int e : v)
        if (e < 2) throw out_of_range(t);
      if (v == std::vector<int>{2, 2, 2, 2}) return {x * x + y * y + z * z, y * y + lam * z * z + w * w};
      return {x * y + p(z, v[2]) + p(w, v[3]), z * w + p(x, v[0]) + p(y, v[1])};
    }
    case Family::Jprime: {
      const Polynomial f = x * y + z * z, base = w * w + x * z;
      int m = 0, r = 0;
      if (v.size() == 2 && v[0] >= 2 && v[0] < 9 && v[1] >= 0) {
        m = v[0] - 1;
        const Polynomial g = base + z * z * p(y, m);
        if (v[1] == 0) return {f, g + lam * p(y, 3 * m + 2)};
        return {f, g + p(y, 3 * m + 2 + v[1])};
      }
      if (v.empty() || v.size() > 2 || !jprime_head(v[0], m, r)) break;
      const int j = v.size() == 2 ? v[1] : 0;
      if (j < 0 || j > m + 1) break;
      const int i = j - 1;
      if (r == 0) return {f, base + p(y, 3 * m + 3) + (j ? z * p(y, 3 * m + 2 - i) : Polynomial())};
      if (r == 1) return {f, base + z * p(y, 2 * m + 2) + (j ? p(y, 4 * m + 4 - i) : Polynomial())};
      return {f, base + p(y, 3 * m + 4) + (j ? p(y, 3 * m + 3 - i) * z : Polynomial())};
    }
    case Family::Kprime:
    case Family::Kb: {
      const Polynomial f = x * y + z * z, base = x * x + w * w;
      if (t.family == Family::Kb) {
        if (v.size() != 2 || v[0] != 1 || v[1] < 1) break;
        return {f, base + Rational(2) * z * z * y + p(y, 4) + z * y * l_poly(v[1], z, y)};
      }
      if (auto s = series_index(t)) {
        const Polynomial g = base + z * z * y;
        if (*s == 0) return {f, g + lam * p(y, 4)};
        if (*s == -1) return {f, g + lam * p(y, 4) + p(y, 5)};
        return {f, g + p(y, 4 + *s)};
      }
      if (shape(t, {10})) return {f, base + p(y, 3)};
      if (shape(t, {10, 1})) return {f, base + p(y, 3) + y * z * z};
      if (shape(t, {11})) return {f, base + z * y * y};
      if (shape(t, {11, 1})) return {f, base + z * y * y + p(y, 4)};
      if (shape(t, {15})) return {f, base + z * p(y, 3)};
      if (shape(t, {15, 1})) return {f, base + z * p(y, 3) + p(y, 6)};
      if (shape(t, {15, 2})) return {f, base + z * p(y, 3) + p(y, 5)};
      if (shape(t, {16})) return {f, base + p(y, 5)};
      if (shape(t, {16, 1})) return {f, base + p(y, 5) + p(y, 3) * z * z};
      if (shape(t, {16, 2})) return {f, base + p(y, 5) + p(y, 2) * z * z};
      break;
    }
    case Family::L: {
      const Polynomial f = w * z + x * y, base = y * y + x * z;
      if (auto s = series_index(t)) {
        const Polynomial g = base + x * x * w;
        if (*s == 0) return {f, g + lam * p(w, 4)};
        if (*s == -1) return {f, g + lam * p(w, 4) + p(w, 5)};
        throw Error(ErrorKind::UnknownNormalForm, "no tabulated normal form for " + t.name());
      }
      if (shape(t, {10})) return {f, base + p(w, 3)};
      if (shape(t, {10, 1})) return {f, base + p(w, 3) + y * w * w};
      if (shape(t, {11})) return {f, base + x * w * w};
      if (shape(t, {11, 1})) return {f, base + x * w * w + p(w, 4)};
      if (shape(t, {15})) return {f, base + x * p(w, 3)};
      if (shape(t, {15, 1})) return {f, base + x * p(w, 3) + p(w, 6)};
      if (shape(t, {15, 2})) return {f, base + x * p(w, 3) + p(w, 5)};
      if (shape(t, {16})) return {f, base + p(w, 5)};
      if (shape(t, {16, 1})) return {f, base + p(w, 5) + y * p(w, 4)};
      if (shape(t, {16, 2})) return {f, base + p(w, 5) + y * p(w, 3)};
      break;
    }
    case Family::Lb: throw Error(ErrorKind::UnknownNormalForm, "no tabulated normal form for " + t.name());
    case Family::M: {
      const Polynomial f = w * y + x * x - z * z, base = w * x;
      if (auto s = series_index(t)) {
        const Polynomial g = base + y * y * x;
        if (*s == 0) return {f, g + lam * y * y * z};
        if (*s == -1) return {f, g + lam * y * y * z + p(y, 3) * z};
        return {f, g + z * l_poly(*s + 1, z, y)};
      }
      if (shape(t, {11})) return {f, base + p(y, 3)};
      if (shape(t, {11, 1})) return {f, base + p(y, 3) + y * y * w};
      if (shape(t, {15})) return {f, base + p(y, 4)};
      if (shape(t, {15, 1})) return {f, base + p(y, 4) + p(y, 3) * w};
      if (shape(t, {15, 2})) return {f, base + p(y, 4) + y * y * w};
      break;
    }
  }
  throw out_of_range(t);
}

}  // namespace

Polynomial l_poly(int i, const Polynomial& a, const Polynomial& b) {
  if (i < 0) throw Error(ErrorKind::IndexOutOfRange, "l_i needs i >= 0");
  const int q = i / 2;
  return i % 2 == 0 ? a * b.pow(q) : b.pow(q + 2);
}

IdealBasis normal_form(const SingularityType& t, std::optional<Rational> lambda) {
  if (lambda && !t.has_modulus()) throw Error(ErrorKind::InvalidInput, t.name() + " has no modulus");
  const Rational lam = lambda.value_or(kDefaultLambda);
  if (t.has_modulus()) {
    switch (t.family) {
      case Family::T:
      case Family::I: check_lambda(t, lam, {0, 1}); break;
      case Family::Jprime: check_lambda(t, lam, {0, Rational(-4, 27)}); break;
      case Family::Kprime: check_lambda(t, lam, {0, Rational(1, 4)}); break;
      case Family::L: check_lambda(t, lam, {0, -1}); break;
      default: check_lambda(t, lam, {0}); break;
    }
  }
  auto [f, g] = forms(t, lam);
  return IdealBasis({f, g});
}

InvariantRecord table_invariants(const SingularityType& t) {
  const auto& v = t.indices;
  auto series = [&](int head_mu) -> std::optional<InvariantRecord> {
    auto s = series_index(t);
    if (!s) return std::nullopt;
    if (*s == 0) return InvariantRecord{head_mu, head_mu};
    if (*s == -1) return InvariantRecord{head_mu, head_mu - 1};
    return InvariantRecord{13 + *s, 11 + *s};
  };
  auto head = [&](int maxj) -> std::optional<InvariantRecord> {
    if (v.size() == 1) return InvariantRecord{v[0], v[0]};
    if (v.size() == 2 && v[1] >= 1 && v[1] <= maxj) return InvariantRecord{v[0], v[0] - v[1]};
    return std::nullopt;
  };
  switch (t.family) {
    case Family::I:
      if (auto r = series(13)) return *r;
      break;
    case Family::T: {
      if (v.size() != 4) break;
      if (v == std::vector<int>{2, 2, 2, 2}) return {7, 7};
      int sum = v[0] + v[1] + v[2] + v[3];
      return {sum - 1, sum - 2};
    }
    case Family::Jprime: {
      if (v.size() == 2 && v[0] >= 2 && v[0] < 9 && v[1] >= 0) {
        int m = v[0] - 1, mu = 6 * m + 7 + v[1];
        return {mu, v[1] == 0 ? mu : 6 * m + 5 + v[1]};
      }
      int m = 0, r = 0;
      if (v.empty() || !jprime_head(v[0], m, r)) break;
      if (auto h = head(m + 1)) return *h;
      break;
    }
    case Family::Kprime:
    case Family::L:
      if (auto r = series(13)) {
        if (t.family == Family::L && v[1] > 0) break;
        return *r;
      }
      if (v.empty() || (v[0] != 10 && v[0] != 11 && v[0] != 15 && v[0] != 16)) break;
      if (auto h = head(v[0] < 15 ? 1 : 2)) return *h;
      break;
    case Family::Kb:
    case Family::Lb:
      if (v.size() == 2 && v[0] == 1 && v[1] >= 1) return {13 + v[1], 11 + v[1]};
      break;
    case Family::M:
      if (auto r = series(13)) return *r;
      if (v.empty() || (v[0] != 11 && v[0] != 15)) break;
      if (auto h = head(v[0] == 11 ? 1 : 2)) return *h;
      break;
  }
  throw out_of_range(t);
}

std::vector<SingularityType> acceptance_grid() {
  std::vector<SingularityType> g;
  auto add = [&](Family f, std::vector<int> idx) { g.push_back({f, std::move(idx)}); };
  add(Family::I, {1, 0});
  add(Family::I, {1, 0, 1});
  for (int i = 1; i <= 3; ++i) add(Family::I, {1, i});

  g.push_back(make_T(2, 2, 2, 2));
  for (int p = 3; p <= 5; ++p) g.push_back(make_T(p, 2, 2, 2));
  for (int p = 3; p <= 5; ++p)
    for (int q = p; q <= 5; ++q) g.push_back(make_T(p, q, 2, 2));
  for (int p = 3; p <= 5; ++p)
    for (int q = p; q <= 5; ++q)
      for (int r = q; r <= 5; ++r) g.push_back(make_T(p, q, r, 2));
  for (int p = 3; p <= 5; ++p)
    for (int q = p; q <= 5; ++q)
      for (int r = q; r <= 5; ++r)
        for (int s = r; s <= 5; ++s) g.push_back(make_T(p, q, r, s));

  for (int m = 1; m <= 2; ++m) {
    for (int r = 0; r <= 2; ++r) {
      int mu = 6 * m + 9 + r;
      add(Family::Jprime, {mu});
      for (int j = 1; j <= m + 1; ++j) add(Family::Jprime, {mu, j});
    }
    for (int i = 0; i <= m; ++i) add(Family::Jprime, {m + 1, i});
  }

  for (Family f : {Family::Kprime, Family::L}) {
    add(f, {10});
    add(f, {10, 1});
    add(f, {11});
    add(f, {11, 1});
    add(f, {1, 0});
    add(f, {1, 0, 1});
    add(f, {15});
    add(f, {15, 1});
    add(f, {15, 2});
    add(f, {16});
    add(f, {16, 1});
    add(f, {16, 2});
    if (f == Family::Kprime) {
      for (int i = 1; i <= 3; ++i) add(Family::Kprime, {1, i});
      for (int i = 1; i <= 3; ++i) add(Family::Kb, {1, i});
    }
  }

  add(Family::M, {11});
  add(Family::M, {11, 1});
  add(Family::M, {1, 0});
  add(Family::M, {1, 0, 1});
  for (int i = 1; i <= 2; ++i) add(Family::M, {1, i});
  add(Family::M, {15});
  add(Family::M, {15, 1});
  add(Family::M, {15, 2});
  return g;
}

std::vector<SingularityType> acceptance_grid(Family f) {
  std::vector<SingularityType> out;
  for (auto& t : acceptance_grid())
    if (t.family == f || (f == Family::Kprime && t.family == Family::Kb) || (f == Family::L && t.family == Family::Lb))
      out.push_back(t);
  return out;
}

Matrix4 random_matrix(std::int64_t seed) {
  Matrix4 m{};
  if (seed == -1) {
    for (int i = 0; i < kAmbientVars; ++i) m[i][i] = 1;
    return m;
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  for (;;) {
    linalg::Matrix d(kAmbientVars, std::vector<Rational>(kAmbientVars));
    for (int i = 0; i < kAmbientVars; ++i)
      for (int j = 0; j < kAmbientVars; ++j) {
        m[i][j] = static_cast<long>(rng() % 7) - 3;
        d[i][j] = m[i][j];
      }
    if (linalg::determinant(std::move(d)) != 0) return m;
  }
}

SubstitutionMap random_linear_change(std::int64_t seed) { return SubstitutionMap::linear(random_matrix(seed)); }

IdealBasis apply(const SubstitutionMap& m, const IdealBasis& I) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(m.apply(g));
  return IdealBasis(std::move(gens), I.ordering);
}

}  // namespace icis
