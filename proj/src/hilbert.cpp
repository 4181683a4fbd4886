#include "icis/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "icis/errors.hpp"

namespace icis {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly sub_shifted(const IntPoly& a, const IntPoly& b, int shift) {
  IntPoly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= b[i];
  trim(r);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](Monomial a, Monomial b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.bits() < b.bits();
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> out;
  for (auto m : g) {
    bool redundant = false;
    for (auto k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

IntPoly numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  // Pairwise coprime generators: product of (1 - t^deg).
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    IntPoly r{1};
    for (auto m : gens) r = sub_shifted(r, r, m.degree());
    return r;
  }
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> quotient;
  for (auto m : gens) {
    Monomial q;
    for (int v = 0; v < kMaxVars; ++v) q.set(v, std::max(0, m[v] - pivot[v]));
    quotient.push_back(q);
  }
  IntPoly a = numerator(gens);
  IntPoly b = numerator(std::move(quotient));
  return sub_shifted(a, b, pivot.degree());
}

// Polynomial arithmetic over Q in the variable s.
using QPoly = std::vector<Rational>;

QPoly mul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

HilbertPoly::HilbertPoly(std::vector<Rational> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational HilbertPoly::operator()(long t) const {
  Rational r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * t + *it;
  return r;
}

Rational HilbertPoly::scheme_degree() const {
  if (coeffs.empty()) return 0;
  Rational r = coeffs.back();
  for (int k = 2; k <= degree(); ++k) r *= k;
  return r;
}

std::string HilbertPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? "-" : "+");
    else if (sgn(c) < 0) os << '-';
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str();
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  (void)nvars;
  return numerator(std::move(gens));
}

HilbertPoly hilbert_polynomial(const IdealBasis& I) {
  if (I.ordering.kind != OrderKind::GradedDegRevLex)
    throw Error(ErrorKind::InvalidInput, "Hilbert polynomial needs a graded ordering");
  for (const auto& g : I.generators)
    if (!g.is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, "ideal is not homogeneous: " + g.to_string());
  const int n = I.ordering.nvars;
  IntPoly num = numerator(standard_basis(I).leading_monomials());
  if (num.empty()) return HilbertPoly();
  // Divide out (1 - t) as often as possible.
  int d = n;
  while (d > 0) {
    Integer s = 0;
    for (auto& c : num) s += c;
    if (s != 0) break;
    // Synthetic division by (1 - t): q_i = sum_{k<=i} num_k.
    IntPoly q(num.size() - 1);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    trim(num);
    --d;
  }
  if (d == 0) return HilbertPoly();
  // HP(s) = sum_i q_i * binom(s - i + d - 1, d - 1).
  QPoly hp(1, Rational(0));
  Rational fact = 1;
  for (int k = 2; k < d; ++k) fact *= k;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    QPoly term{Rational(1)};
    for (int k = 1; k < d; ++k) term = mul(term, QPoly{Rational(k - static_cast<long>(i)), Rational(1)});
    for (auto& c : term) c = c * Rational(num[i]) / fact;
    if (hp.size() < term.size()) hp.resize(term.size(), Rational(0));
    for (std::size_t k = 0; k < term.size(); ++k) hp[k] += term[k];
  }
  return HilbertPoly(std::move(hp));
}

}  // namespace icis
