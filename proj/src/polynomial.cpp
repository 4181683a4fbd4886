#include "icis/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace icis {

namespace {

const OrderingTag kCanonical = OrderingTag::graded(kMaxVars);

bool canonical_greater(const Term& a, const Term& b) { return kCanonical.compare(a.mono, b.mono) > 0; }

std::vector<Term> collect(std::unordered_map<Monomial, Rational>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), canonical_greater);
  return out;
}

}  // namespace

char variable_name(int var) {
  static constexpr char kNames[] = "xyzwuvt";
  return var >= 0 && var < kMaxVars ? kNames[var] : '?';
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::monomial(Monomial m, const Rational& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(int var, int power) { return monomial(Monomial::variable(var, power)); }

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(terms.size() * 2);
  for (auto& t : terms) acc[t.mono] += t.coeff;
  // callers may hand in non-canonical fractions such as 4/2
  for (auto& [m, c] : acc) c.canonicalize();
  Polynomial p;
  p.terms_ = collect(acc);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Rational Polynomial::coefficient(Monomial m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

unsigned Polynomial::support() const {
  unsigned s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    int c = kCanonical.compare(a->mono, b->mono);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (sgn(s) != 0) out.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) out.push_back(std::move(*a));
  for (; b != be; ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return Polynomial::multiply_truncated(a, b, std::numeric_limits<int>::max());
}

Polynomial Polynomial::multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    Monomial m = a.terms_[0].mono * b.terms_[0].mono;
    if (m.degree() <= max_degree) r.terms_.push_back({m, a.terms_[0].coeff * b.terms_[0].coeff});
    return r;
  }
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& s : a.terms_) {
    int ds = s.mono.degree();
    if (ds > max_degree) continue;
    for (const auto& t : b.terms_) {
      if (ds + t.mono.degree() > max_degree) continue;
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
      acc[s.mono * t.mono] += prod;
    }
  }
  r.terms_ = collect(acc);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r;
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < kMaxVars && i < static_cast<int>(point.size()); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      v *= p;
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool one = t.mono.is_one();
    bool unit = (c == 1);
    if (!unit || one) {
      os << c.get_str();
      if (!one) os << '*';
    }
    bool firstvar = true;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (!firstvar) os << '*';
      firstvar = false;
      os << variable_name(i);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

Polynomial jet(const Polynomial& f, int k) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.mono.degree() <= k) out.push_back(t);
  return Polynomial::from_terms(std::move(out));
}

int order(const Polynomial& f) {
  int o = kInfinite;
  for (const auto& t : f.terms()) o = std::min(o, t.mono.degree());
  return o;
}

SubstitutionMap::SubstitutionMap() {
  for (int i = 0; i < kMaxVars; ++i) images_[i] = Polynomial::variable(i);
}

SubstitutionMap& SubstitutionMap::set(int var, Polynomial image) {
  images_[var] = std::move(image);
  return *this;
}

SubstitutionMap SubstitutionMap::linear(const std::array<std::array<Rational, kAmbientVars>, kAmbientVars>& m) {
  SubstitutionMap s;
  for (int i = 0; i < kAmbientVars; ++i) {
    std::vector<Term> t;
    for (int j = 0; j < kAmbientVars; ++j) t.push_back({Monomial::variable(j), m[i][j]});
    s.images_[i] = Polynomial::from_terms(std::move(t));
  }
  return s;
}

Polynomial SubstitutionMap::apply(const Polynomial& f) const {
  return apply_truncated(f, std::numeric_limits<int>::max());
}

Polynomial SubstitutionMap::apply_truncated(const Polynomial& f, int max_degree) const {
  // Cache powers of each image; terms are combined by accumulation.
  std::array<std::vector<Polynomial>, kMaxVars> powers;
  auto power = [&](int var, int e) -> const Polynomial& {
    auto& p = powers[var];
    if (p.empty()) p.push_back(Polynomial(1L));
    while (static_cast<int>(p.size()) <= e) p.push_back(Polynomial::multiply_truncated(p.back(), images_[var], max_degree));
    return p[e];
  };
  // Order of each image bounds which terms can survive truncation.
  std::array<int, kMaxVars> ord{};
  for (int i = 0; i < kMaxVars; ++i) ord[i] = order(images_[i]);

  Polynomial result;
  std::vector<Term> pending;
  for (const auto& t : f.terms()) {
    long lowest = 0;
    bool vanishes = false;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (ord[i] == kInfinite) {
        vanishes = true;
        break;
      }
      lowest += static_cast<long>(ord[i]) * e;
    }
    if (vanishes || lowest > max_degree) continue;
    Polynomial prod(t.coeff);
    for (int i = 0; i < kMaxVars && !prod.is_zero(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      prod = Polynomial::multiply_truncated(prod, power(i, e), max_degree);
    }
    for (auto& term : prod.terms()) pending.push_back(term);
  }
  return Polynomial::from_terms(std::move(pending));
}

Polynomial substitute(const Polynomial& f, const SubstitutionMap& m) { return m.apply(f); }

}  // namespace icis
