#include "icis/classifier.hpp"

#include <algorithm>
#include <numeric>

#include "icis/errors.hpp"

namespace icis {

namespace {

using Opt = std::optional<SingularityType>;

bool is_single(const TypeList& B, GermKind kind, int k) {
  return B.size() == 1 && B[0].kind == kind && B[0].k == k;
}
bool smooth(const TypeList& B) { return B.empty(); }

SingularityType named(Family f, std::vector<int> idx) { return {f, std::move(idx)}; }

// Heads (mu, B) of the K' and L lists; mu = 13 is the (1,0) row.
Opt k_or_l(Family fam, Family bar, int mu, int tau, const TypeList& B) {
  const int d = mu - tau;
  auto head = [&](int maxd) -> Opt {
    if (d < 0 || d > maxd) return std::nullopt;
    if (mu == 13) return d == 0 ? named(fam, {1, 0}) : named(fam, {1, 0, 1});
    return d == 0 ? named(fam, {mu}) : named(fam, {mu, d});
  };
  if (mu == 10 && smooth(B)) return head(1);
  if (mu == 11 && is_single(B, GermKind::A, 1)) return head(1);
  if (mu == 13 && is_single(B, GermKind::A, 3)) return head(1);
  if (mu == 15 && is_single(B, GermKind::D, 5)) return head(2);
  if (mu == 16 && is_single(B, GermKind::E, 6)) return head(2);
  if (d == 2 && mu > 13) {
    if (is_single(B, GermKind::D, mu - 10)) return named(fam, {1, mu - 13});
    if (is_single(B, GermKind::A, mu - 10)) return named(bar, {1, mu - 13});
  }
  return std::nullopt;
}

}  // namespace

std::optional<SingularityType> classify_I(int mu, int tau, const TypeList& B) {
  if (mu == 13 && is_single(B, GermKind::A, 1)) {
    if (mu == tau) return named(Family::I, {1, 0});
    if (mu - tau == 1) return named(Family::I, {1, 0, 1});
  }
  if (mu > 13 && mu - tau == 2 && is_single(B, GermKind::A, mu - 12)) return named(Family::I, {1, mu - 13});
  return std::nullopt;
}

std::optional<SingularityType> classify_T(int mu, int tau, TwoJetClass jet, const TypeList& B) {
  if (jet == TwoJetClass::T2222) {
    if (mu == tau && mu == 7 && smooth(B)) return make_T(2, 2, 2, 2);
    return std::nullopt;
  }
  if (mu - tau != 1) return std::nullopt;
  int free = 0;
  switch (jet) {
    case TwoJetClass::Tp222: free = 1; break;
    case TwoJetClass::Tpq22: free = 2; break;
    case TwoJetClass::Tpqr2: free = 3; break;
    case TwoJetClass::Tpqrs: free = 4; break;
    default: return std::nullopt;
  }
  if (static_cast<int>(B.size()) > free) return std::nullopt;
  // Every A_k on the exceptional divisor is one index k + 3; the rest are 3.
  std::vector<int> idx;
  for (const auto& t : B) {
    if (t.kind != GermKind::A) return std::nullopt;
    idx.push_back(t.k + 3);
  }
  while (static_cast<int>(idx.size()) < free) idx.push_back(3);
  while (idx.size() < 4) idx.push_back(2);
  if (std::accumulate(idx.begin(), idx.end(), 0) - 1 != mu) return std::nullopt;
  return make_T(idx[0], idx[1], idx[2], idx[3]);
}

std::optional<SingularityType> classify_Jprime(int mu, int tau, const TypeList& B) {
  if (B.size() != 1 || mu < tau) return std::nullopt;
  const GermType& b = B[0];
  if (b.kind == GermKind::E) {
    const int m = (mu - 9) / 6;
    const int r = mu % 6;
    if (m < 1 || (r != 3 && r != 4 && r != 5) || b.k != mu - 9) return std::nullopt;
    if (mu == tau) return named(Family::Jprime, {mu});
    if (mu - tau <= m + 1) return named(Family::Jprime, {mu, mu - tau});
    return std::nullopt;
  }
  // J'_{m+1,i} blows up to J[m-1,i]; J[0,i] is D_{4+i}.
  int m = 0, i = 0;
  if (b.kind == GermKind::D) {
    m = 1;
    i = b.k - 4;
  } else if (b.kind == GermKind::J) {
    m = b.k + 1;
    i = b.i;
  } else {
    return std::nullopt;
  }
  if (mu != 6 * m + 7 + i) return std::nullopt;
  if (i == 0 && mu == tau) return named(Family::Jprime, {m + 1, 0});
  if (i > 0 && mu > tau) return named(Family::Jprime, {m + 1, i});
  return std::nullopt;
}

std::optional<SingularityType> classify_Kprime(int mu, int tau, const TypeList& B) {
  return k_or_l(Family::Kprime, Family::Kb, mu, tau, B);
}

std::optional<SingularityType> classify_L(int mu, int tau, const TypeList& B) {
  return k_or_l(Family::L, Family::Lb, mu, tau, B);
}

std::optional<SingularityType> classify_M(int mu, int tau, const TypeList& B) {
  const int d = mu - tau;
  if (mu == 11 && smooth(B)) {
    if (d == 0) return named(Family::M, {11});
    if (d == 1) return named(Family::M, {11, 1});
  }
  if (mu == 13 && is_single(B, GermKind::A, 2)) {
    if (d == 0) return named(Family::M, {1, 0});
    if (d == 1) return named(Family::M, {1, 0, 1});
  }
  if (mu == 15 && is_single(B, GermKind::D, 4)) {
    if (d == 0) return named(Family::M, {15});
    if (d == 1 || d == 2) return named(Family::M, {15, d});
  }
  if (d == 2 && mu > 13 && is_single(B, GermKind::A, mu - 11)) return named(Family::M, {1, mu - 13});
  return std::nullopt;
}

std::optional<SingularityType> classify_invariants(TwoJetClass jet, int mu, int tau, const TypeList& B) {
  switch (jet) {
    case TwoJetClass::I: return classify_I(mu, tau, B);
    case TwoJetClass::T2222:
    case TwoJetClass::Tp222:
    case TwoJetClass::Tpq22:
    case TwoJetClass::Tpqr2:
    case TwoJetClass::Tpqrs: return classify_T(mu, tau, jet, B);
    case TwoJetClass::Jprime: return classify_Jprime(mu, tau, B);
    case TwoJetClass::Kprime: return classify_Kprime(mu, tau, B);
    case TwoJetClass::L: return classify_L(mu, tau, B);
    case TwoJetClass::M: return classify_M(mu, tau, B);
    case TwoJetClass::None: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void check_shape(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorKind::NotCompleteIntersection, "a generator is zero");
  if (f.constant_term() != 0 || g.constant_term() != 0)
    throw Error(ErrorKind::InvalidInput, "the origin is not on V(f, g)");
  if (!jet(f, 1).is_zero() || !jet(g, 1).is_zero())
    throw Error(ErrorKind::Hypersurface, "a generator has a linear part; the germ is a hypersurface");
}

int majority_mu(const Polynomial& f, const Polynomial& g, const ClassifyOptions& opt, int first,
                std::vector<std::string>& diag) {
  int second = milnor_icis(f, g, opt.mu_cap, opt.seed + 1);
  if (second == first) return first;
  int third = milnor_icis(f, g, opt.mu_cap, opt.seed + 2);
  diag.push_back("generic combinations disagree on mu: " + std::to_string(first) + ", " + std::to_string(second) +
                 ", " + std::to_string(third));
  return third == second ? second : first;
}

}  // namespace

ClassificationResult classify(const Polynomial& f0, const Polynomial& g0, const ClassifyOptions& opt) {
  ClassificationResult r;
  Polynomial f = f0, g = g0;
  const int bound = opt.mu_cap + 2;
  if (f.degree() > bound || g.degree() > bound) {
    f = jet(f, bound);
    g = jet(g, bound);
    r.diagnostics.push_back("generators truncated at degree " + std::to_string(bound));
  }
  check_shape(f, g);

  r.invariants.mu = milnor_icis(f, g, opt.mu_cap, opt.seed);
  if (opt.verify) r.invariants.mu = majority_mu(f, g, opt, r.invariants.mu, r.diagnostics);
  r.invariants.tau = tjurina_icis(f, g, opt.mu_cap);
  if (r.invariants.mu < r.invariants.tau)
    throw Error(ErrorKind::InternalInconsistency, "Milnor number " + std::to_string(r.invariants.mu) +
                                                      " below Tjurina number " + std::to_string(r.invariants.tau));

  r.twojet = classify_two_jet(f, g);
  if (r.twojet.cls == TwoJetClass::None) {
    r.diagnostics.push_back("2-jet outside the unimodular configurations");
    for (const auto& d : r.twojet.diagnostics) r.diagnostics.push_back(d);
    return r;
  }
  try {
    r.blowup = blowup(f, g, opt.mu_cap);
  } catch (const Error& e) {
    r.diagnostics.push_back(std::string("blow-up: ") + e.what());
    return r;
  }
  r.type = classify_invariants(r.twojet.cls, r.invariants.mu, r.invariants.tau, r.blowup.types);
  if (!r.type) {
    std::string b;
    for (const auto& t : r.blowup.types) b += (b.empty() ? "" : " ") + t.to_string();
    r.diagnostics.push_back(std::string("no branch for 2-jet ") + to_string(r.twojet.cls) +
                            " with mu=" + std::to_string(r.invariants.mu) +
                            " tau=" + std::to_string(r.invariants.tau) + " B={" + b + "}");
  }
  return r;
}

ClassificationResult classify(const IdealBasis& I, const ClassifyOptions& opt) {
  if (I.generators.size() != 2)
    throw Error(ErrorKind::InvalidInput, "expected two generators, got " + std::to_string(I.generators.size()));
  return classify(I.generators[0], I.generators[1], opt);
}

}  // namespace icis
