#include <algorithm>
#include <limits>

#include "engine.hpp"

namespace icis::engine {

namespace {

int total_degree(const EPoly& p) {
  int d = 0;
  for (const auto& t : p) d = std::max(d, t.m.degree());
  return d;
}

int ecart(const EPoly& p) { return total_degree(p) - p.front().m.degree(); }

// Returns a*h - b*t*g, skipping the leading terms of both (they cancel by construction).
EPoly combine(const EPoly& h, const Integer& a, const EPoly& g, Monomial t, const Integer& b, const Options& opt) {
  EPoly out;
  out.reserve(h.size() + g.size());
  const OrderingTag& ord = opt.order;
  std::size_t i = 1, j = 1;
  Integer tmp;
  auto keep = [&](Monomial m) { return opt.truncate == 0 || m.degree() < opt.truncate; };
  while (i < h.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back({h[i].m, a * h[i].c});
      ++i;
      continue;
    }
    Monomial gm = t * g[j].m;
    if (!keep(gm)) {
      ++j;
      continue;
    }
    int c = i < h.size() ? ord.compare(h[i].m, gm) : -1;
    if (c > 0) {
      out.push_back({h[i].m, a * h[i].c});
      ++i;
    } else if (c < 0) {
      out.push_back({gm, -b * g[j].c});
      ++j;
    } else {
      tmp = a * h[i].c;
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), g[j].c.get_mpz_t());
      if (sgn(tmp) != 0) out.push_back({gm, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

// One reduction step of h by g (lm(g) divides lm(h)).  Scales h; the factor applied to h is returned in `scale`.
EPoly reduce_by(const EPoly& h, const EPoly& g, const Options& opt, Integer& scale) {
  Integer d;
  mpz_gcd(d.get_mpz_t(), h.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  Integer a = g.front().c / d;
  Integer b = h.front().c / d;
  if (sgn(a) < 0) {
    a = -a;
    b = -b;
  }
  scale = a;
  return combine(h, a, g, h.front().m / g.front().m, b, opt);
}

EPoly spoly(const EPoly& f, const EPoly& g, const Options& opt) {
  Monomial l = f.front().m.lcm(g.front().m);
  Integer d;
  mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  Integer a = g.front().c / d;
  Integer b = f.front().c / d;
  // a*(l/lm f)*f - b*(l/lm g)*g
  EPoly fl;
  fl.reserve(f.size());
  Monomial tf = l / f.front().m;
  for (const auto& t : f) {
    Monomial m = tf * t.m;
    if (opt.truncate && m.degree() >= opt.truncate) continue;
    fl.push_back({m, t.c});
  }
  if (fl.empty() || fl.front().m != l) return {};
  return combine(fl, a, g, l / g.front().m, b, opt);
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
  bool alive = true;
};

class Builder {
 public:
  explicit Builder(const Options& opt) : opt_(opt) {}

  void add_generator(EPoly h) {
    h = top_reduce(std::move(h));
    if (!h.empty()) insert(std::move(h));
  }

  void run() {
    for (;;) {
      int best = -1;
      for (int k = 0; k < static_cast<int>(pairs_.size()); ++k) {
        const Pair& p = pairs_[k];
        if (!p.alive) continue;
        if (best < 0 || less(p, pairs_[best])) best = k;
      }
      if (best < 0) break;
      Pair p = pairs_[best];
      pairs_[best].alive = false;
      ++processed_;
      if (processed_ % 4096 == 0) compact();
      EPoly s = spoly(basis_[p.i], basis_[p.j], opt_);
      if (s.empty()) continue;
      make_primitive(s);
      s = top_reduce(std::move(s));
      if (!s.empty()) insert(std::move(s));
    }
  }

  std::vector<EPoly> finish() {
    std::vector<EPoly> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) out.push_back(std::move(basis_[k]));
    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<bool> redundant(out.size(), false);
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (std::size_t l = 0; l < out.size() && !redundant[k]; ++l) {
        if (l == k) continue;
        Monomial a = out[l].front().m, b = out[k].front().m;
        if (a.divides(b) && (a != b || l < k)) redundant[k] = true;
      }
    }
    std::vector<EPoly> minimal;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (!redundant[k]) minimal.push_back(std::move(out[k]));
    std::sort(minimal.begin(), minimal.end(),
              [&](const EPoly& a, const EPoly& b) { return opt_.order.compare(a.front().m, b.front().m) < 0; });
    if (opt_.reduce && (!opt_.order.is_local() || opt_.truncate > 0)) {
      for (std::size_t k = 0; k < minimal.size(); ++k) {
        EPoly head{minimal[k].front()};
        EPoly tail(minimal[k].begin() + 1, minimal[k].end());
        std::vector<EPoly> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
          if (l != k) others.push_back(minimal[l]);
        Integer scale;
        EPoly red = full_reduce(std::move(tail), others, scale);
        head.front().c *= scale;
        head.insert(head.end(), red.begin(), red.end());
        make_primitive(head);
        minimal[k] = std::move(head);
      }
    }
    return minimal;
  }

  EPoly top_reduce(EPoly h) const {
    if (opt_.order.is_local() && opt_.truncate == 0) return mora_reduce(std::move(h));
    while (!h.empty()) {
      const EPoly* g = find_reducer(h.front().m);
      if (!g) break;
      Integer scale;
      h = reduce_by(h, *g, opt_, scale);
      if (h.size() > 8) make_primitive(h);
    }
    if (!h.empty()) make_primitive(h);
    return h;
  }

  // Reduces every term of h (the caller guarantees termination: global or truncated order).
  EPoly full_reduce(EPoly h, const std::vector<EPoly>& G, Integer& scale) const {
    scale = 1;
    EPoly done;
    while (!h.empty()) {
      const EPoly* g = nullptr;
      for (const auto& c : G)
        if (c.front().m.divides(h.front().m) && (!g || c.size() < g->size())) g = &c;
      if (!g) {
        done.push_back(std::move(h.front()));
        h.erase(h.begin());
        continue;
      }
      Integer s;
      h = reduce_by(h, *g, opt_, s);
      if (s != 1) {
        scale *= s;
        for (auto& t : done) t.c *= s;
      }
    }
    return done;
  }

 private:
  bool less(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  const EPoly* find_reducer(Monomial m) const {
    const EPoly* best = nullptr;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      if (basis_[k].front().m.divides(m) && (!best || basis_[k].size() < best->size())) best = &basis_[k];
    }
    return best;
  }

  EPoly mora_reduce(EPoly h) const {
    std::vector<EPoly> extra;
    while (!h.empty()) {
      const EPoly* g = nullptr;
      int ge = std::numeric_limits<int>::max();
      auto consider = [&](const EPoly& c) {
        if (!c.front().m.divides(h.front().m)) return;
        int e = ecart(c);
        if (e < ge) {
          ge = e;
          g = &c;
        }
      };
      for (std::size_t k = 0; k < basis_.size(); ++k)
        if (active_[k]) consider(basis_[k]);
      for (const auto& c : extra) consider(c);
      if (!g) break;
      EPoly hn;
      Integer scale;
      if (ge > ecart(h)) {
        EPoly copy = *g;
        extra.push_back(h);
        hn = reduce_by(h, copy, opt_, scale);
      } else {
        hn = reduce_by(h, *g, opt_, scale);
      }
      h = std::move(hn);
      if (!h.empty()) make_primitive(h);
    }
    return h;
  }

  bool coprime_leads(Monomial a, Monomial b) const { return !opt_.module && a.coprime(b); }

  void insert(EPoly h) {
    make_primitive(h);
    const int n = static_cast<int>(basis_.size());
    const Monomial lh = h.front().m;
    // Gebauer-Moeller update.
    struct Cand {
      int g;
      Monomial lcm;
      bool keep = true;
    };
    std::vector<Cand> c;
    for (int k = 0; k < n; ++k) {
      if (!active_[k]) continue;
      Monomial lg = basis_[k].front().m;
      if (lg.component() != lh.component()) continue;
      c.push_back({k, lh.lcm(lg)});
    }
    auto pair_deg = [](Monomial m) { return m.degree(); };
    // Chain criterion among new pairs.
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (coprime_leads(lh, basis_[c[a].g].front().m)) continue;
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (a == b || !c[b].keep) continue;
        if (c[b].lcm.divides(c[a].lcm) && (c[b].lcm != c[a].lcm || b < a)) {
          c[a].keep = false;
          break;
        }
      }
    }
    // Drop old pairs that are implied.
    for (auto& p : pairs_) {
      if (!p.alive) continue;
      if (!lh.divides(p.lcm)) continue;
      Monomial li = lh.lcm(basis_[p.i].front().m), lj = lh.lcm(basis_[p.j].front().m);
      if (li != p.lcm && lj != p.lcm) p.alive = false;
    }
    for (auto& cd : c) {
      if (!cd.keep) continue;
      if (coprime_leads(lh, basis_[cd.g].front().m)) continue;
      int d = pair_deg(cd.lcm);
      if (opt_.truncate && d >= opt_.truncate) continue;
      pairs_.push_back({cd.g, n, cd.lcm, d});
    }
    for (int k = 0; k < n; ++k)
      if (active_[k] && lh.divides(basis_[k].front().m)) active_[k] = false;
    basis_.push_back(std::move(h));
    active_.push_back(true);
  }

  void compact() {
    std::erase_if(pairs_, [](const Pair& p) { return !p.alive; });
  }

  const Options& opt_;
  std::vector<EPoly> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  long processed_ = 0;
};

}  // namespace

void sort_terms(EPoly& p, const OrderingTag& order) {
  std::sort(p.begin(), p.end(), [&](const ETerm& a, const ETerm& b) { return order.compare(a.m, b.m) > 0; });
}

void make_primitive(EPoly& p) {
  if (p.empty()) return;
  Integer g = abs(p.front().c);
  for (std::size_t i = 1; i < p.size() && g != 1; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p[i].c.get_mpz_t());
  bool neg = sgn(p.front().c) < 0;
  if (g == 1 && !neg) return;
  if (neg) g = -g;
  for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

EPoly from_polynomial(const Polynomial& f, const Options& opt, int component) {
  Integer den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  EPoly p;
  p.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (opt.truncate && t.mono.degree() >= opt.truncate) continue;
    Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
    p.push_back({component ? t.mono.with_component(component) : t.mono, c});
  }
  sort_terms(p, opt.order);
  make_primitive(p);
  return p;
}

Polynomial to_polynomial(const EPoly& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.m.plain(), Rational(t.c)});
  return Polynomial::from_terms(std::move(terms));
}

std::vector<EPoly> standard_basis(std::vector<EPoly> gens, const Options& opt) {
  Builder b(opt);
  // Deterministic input order: sort by leading monomial, smallest first.
  std::erase_if(gens, [](const EPoly& p) { return p.empty(); });
  for (auto& g : gens) make_primitive(g);
  std::stable_sort(gens.begin(), gens.end(), [&](const EPoly& a, const EPoly& c) {
    int r = opt.order.compare(a.front().m, c.front().m);
    if (r != 0) return r < 0;
    return a.size() < c.size();
  });
  for (auto& g : gens) b.add_generator(std::move(g));
  b.run();
  return b.finish();
}

EPoly normal_form(EPoly f, const std::vector<EPoly>& G, const Options& opt) {
  if (f.empty()) return f;
  make_primitive(f);
  if (opt.order.is_local() && opt.truncate == 0) {
    Builder b(opt);
    for (const auto& g : G) b.add_generator(g);
    return b.top_reduce(std::move(f));
  }
  Builder b(opt);
  Integer scale;
  EPoly r = b.full_reduce(std::move(f), G, scale);
  make_primitive(r);
  return r;
}

Polynomial exact_normal_form(const Polynomial& f, const std::vector<EPoly>& G, const Options& opt) {
  EPoly p = from_polynomial(f, opt);
  if (p.empty()) return {};
  // p = c * f, recover c from the leading term
  Rational c = Rational(p.front().c) / f.coefficient(p.front().m.plain());
  Builder b(opt);
  Integer scale;
  EPoly r = b.full_reduce(std::move(p), G, scale);
  Polynomial out = to_polynomial(r);
  Rational k = c * Rational(scale);
  return out * Rational(1 / k);
}

}  // namespace icis::engine
