#include "icis/univariate.hpp"

#include <algorithm>
#include <tuple>

namespace icis {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rational evaluate(const UPoly& p, const Rational& t) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
  return r;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

UPoly multiply(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  UPoly r = a, q;
  trim(r);
  const int db = degree(b);
  if (degree(r) >= db) q.assign(r.size() - b.size() + 1, Rational(0));
  while (!r.empty() && degree(r) >= db) {
    int shift = degree(r) - db;
    Rational c = r.back() / b.back();
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UPoly out;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    UPoly term{Rational(1)};
    Rational den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      term = multiply(term, UPoly{-xs[j], Rational(1)});
      den *= xs[i] - xs[j];
    }
    if (out.size() < term.size()) out.resize(term.size(), Rational(0));
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += term[k] * ys[i] / den;
  }
  trim(out);
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly g = gcd(p, derivative(p));
  if (degree(g) <= 0) return p;
  return divmod(p, g).first;
}

namespace {

using ZPoly = std::vector<Integer>;

ZPoly integer_primitive(const UPoly& p) {
  Integer den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : p) z.push_back(c.get_num() * (den / c.get_den()));
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : z) c /= g;
  return z;
}

long mod(const Integer& a, long p) { return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), p)); }

using ModPoly = std::vector<long>;

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return (t % p + p) % p;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, long p) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    long inv = inv_mod(b.back(), p);
    while (!a.empty() && a.size() >= b.size()) {
      long c = a.back() * inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
      trim_mod(a);
    }
    std::swap(a, b);
  }
  return a;
}

long eval_mod(const ModPoly& f, long x, long p) {
  long r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = (r * x + *it) % p;
  return r;
}

Integer eval_int(const ZPoly& f, const Integer& x, const Integer& m) {
  Integer r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    r = r * x + *it;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Rational number n/d with |n|, d <= sqrt(m/2) congruent to a mod m.
std::optional<Rational> reconstruct(const Integer& a, const Integer& m) {
  Integer bound = sqrt(m / 2);
  Integer r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  UPoly sp = p;
  trim(sp);
  std::vector<Rational> roots;
  if (degree(sp) <= 0) return roots;
  sp = squarefree_part(sp);
  if (sp[0] == 0) {
    roots.push_back(0);
    sp.erase(sp.begin());
    trim(sp);
  }
  if (degree(sp) >= 1) {
    ZPoly f = integer_primitive(sp);
    const int n = static_cast<int>(f.size()) - 1;
    ZPoly df;
    for (int i = 1; i <= n; ++i) df.push_back(f[i] * i);
    // Pick a prime keeping the degree and squarefreeness.
    long prime = 1009;
    for (;; prime += 2) {
      if (!is_prime(prime) || mod(f.back(), prime) == 0) continue;
      ModPoly fm, dm;
      for (auto& c : f) fm.push_back(mod(c, prime));
      for (auto& c : df) dm.push_back(mod(c, prime));
      if (gcd_mod(fm, dm, prime).size() == 1) break;
    }
    ModPoly fm;
    for (auto& c : f) fm.push_back(mod(c, prime));
    Integer bound = 2 * abs(f.front()) * abs(f.back()) + 1;
    bound *= bound;
    for (long r = 0; r < prime; ++r) {
      if (eval_mod(fm, r, prime) != 0) continue;
      Integer x = r, m = prime;
      while (m <= bound) {
        Integer m2 = m * m;
        Integer fx = eval_int(f, x, m2), dfx = eval_int(df, x, m2);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m2.get_mpz_t());
        x = x - fx * inv;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m2.get_mpz_t());
        m = m2;
      }
      auto q = reconstruct(x, m);
      if (q && evaluate(sp, *q) == 0) roots.push_back(*q);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

UPoly to_univariate(const Polynomial& f, int var) {
  UPoly p;
  for (const auto& t : f.terms()) {
    int e = t.mono[var];
    if (static_cast<int>(p.size()) <= e) p.resize(e + 1, Rational(0));
    p[e] += t.coeff;
  }
  trim(p);
  return p;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Rational r(sqrt(q.get_num()), sqrt(q.get_den()));
  r.canonicalize();
  return r;
}

}  // namespace icis
