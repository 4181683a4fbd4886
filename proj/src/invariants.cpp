#include "icis/invariants.hpp"

#include <random>

#include "icis/errors.hpp"
#include "icis/ideal.hpp"
#include "linalg.hpp"

namespace icis {

namespace {

// Generators that pin the variables beyond nvars to zero.
void pin_unused(std::vector<Polynomial>& gens, int nvars) {
  for (int v = nvars; v < kAmbientVars; ++v) gens.push_back(Polynomial::variable(v));
}

int draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 14);
  int k = dist(rng);
  return k <= 7 ? -k : k - 7;
}

bool complete_intersection(const Polynomial& f, const Polynomial& g) {
  return local_krull_dim({f, g}) <= kAmbientVars - 2;
}

}  // namespace

int milnor_hyp(const Polynomial& f, int nvars, int cap) {
  std::vector<Polynomial> jac;
  for (int v = 0; v < nvars; ++v) jac.push_back(f.derivative(v));
  pin_unused(jac, nvars);
  int m = local_vdim(jac, cap);
  if (m == kInfinite) throw Error(ErrorKind::NotIsolated, "not an isolated singularity");
  return m;
}

int tjurina_hyp(const Polynomial& f, int nvars, int cap) {
  std::vector<Polynomial> gens{f};
  for (int v = 0; v < nvars; ++v) gens.push_back(f.derivative(v));
  pin_unused(gens, nvars);
  int t = local_vdim(gens, cap);
  if (t == kInfinite) throw Error(ErrorKind::NotIsolated, "not an isolated singularity");
  return t;
}

int hessian_rank(const Polynomial& f, int nvars) {
  linalg::Matrix h(nvars, std::vector<Rational>(nvars, Rational(0)));
  Polynomial q = f.homogeneous_part(2);
  for (int i = 0; i < nvars; ++i)
    for (int j = 0; j < nvars; ++j) h[i][j] = q.derivative(i).derivative(j).constant_term();
  return linalg::rank(std::move(h));
}

int corank(const Polynomial& f, int nvars) { return nvars - hessian_rank(f, nvars); }

int milnor_icis(const Polynomial& f, const Polynomial& g, int cap, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 24; ++attempt) {
    int a = draw(rng), b = draw(rng);
    Polynomial h = f * Rational(a) + g * Rational(b);
    // mu(h) may exceed mu(f,g); allow a generous bound before declaring h degenerate.
    int mu_h = kInfinite;
    try {
      mu_h = milnor_hyp(h, kAmbientVars, 4 * cap + 16);
    } catch (const Error&) {
      continue;
    }
    // <h, g> = <f, g> since a != 0.
    std::vector<Polynomial> gens{h};
    for (int i = 0; i < kAmbientVars; ++i)
      for (int j = i + 1; j < kAmbientVars; ++j)
        gens.push_back(h.derivative(i) * g.derivative(j) - h.derivative(j) * g.derivative(i));
    int total = local_vdim(gens, cap + mu_h);
    if (total == kInfinite) {
      if (!complete_intersection(f, g))
        throw Error(ErrorKind::NotCompleteIntersection, "generators do not define a complete intersection");
      throw Error(ErrorKind::NotIsolated, "not an isolated singularity");
    }
    return total - mu_h;
  }
  if (!complete_intersection(f, g))
    throw Error(ErrorKind::NotCompleteIntersection, "generators do not define a complete intersection");
  throw Error(ErrorKind::NotIsolated, "not an isolated singularity");
}

int tjurina_icis(const Polynomial& f, const Polynomial& g, int cap) {
  std::vector<std::vector<Polynomial>> vecs;
  for (int i = 0; i < kAmbientVars; ++i) vecs.push_back({f.derivative(i), g.derivative(i)});
  vecs.push_back({f, Polynomial()});
  vecs.push_back({g, Polynomial()});
  vecs.push_back({Polynomial(), f});
  vecs.push_back({Polynomial(), g});
  int t = local_module_vdim(vecs, 2, cap);
  if (t == kInfinite) throw Error(ErrorKind::NotIsolated, "not an isolated singularity");
  return t;
}

InvariantRecord icis_invariants(const Polynomial& f, const Polynomial& g, int cap, std::uint64_t seed) {
  InvariantRecord r;
  r.mu = milnor_icis(f, g, cap, seed);
  r.tau = tjurina_icis(f, g, cap);
  if (r.mu < r.tau)
    throw Error(ErrorKind::InternalInconsistency,
                "Milnor number " + std::to_string(r.mu) + " below Tjurina number " + std::to_string(r.tau));
  return r;
}

}  // namespace icis
