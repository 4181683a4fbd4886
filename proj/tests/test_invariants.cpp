#include <doctest.h>

#include "icis/catalogue.hpp"
#include "icis/errors.hpp"
#include "icis/invariants.hpp"
#include "oracle.hpp"

using namespace icis;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<Polynomial> jacobian_ideal(const Polynomial& f, int n) {
  std::vector<Polynomial> out;
  for (int v = 0; v < n; ++v) out.push_back(f.derivative(v));
  return out;
}

}  // namespace

TEST_CASE("milnor_icis") {
  CHECK(milnor_icis(P("x*(y-z)+w^3"), P("y*(z-x)+2*w^3")) == 13);
  CHECK(milnor_icis(P("x*y+z^2+w^2"), P("z*w+x^2+y^2")) == 7);
  CHECK(milnor_icis(P("x*y+z^2"), P("w^2+x^2+y^3")) == 10);
}

TEST_CASE("tjurina_icis") {
  CHECK(tjurina_icis(P("x*(y-z)+w^3"), P("y*(z-x)+2*w^3+w^4")) == 12);
  CHECK(tjurina_icis(P("x*y+z^2"), P("x^2+w^2+z*y^2")) == 11);
  CHECK(tjurina_icis(P("w*z+x*y"), P("y^2+x*z+w^3+y*w^2")) == 9);
}

TEST_CASE("hypersurface invariants and corank") {
  CHECK(milnor_hyp(P("x^2+y^2+z^2"), 3) == 1);
  CHECK(milnor_hyp(P("x^3+y^2+z^2"), 3) == 2);
  CHECK(milnor_hyp(P("x^3+y^4+z^2"), 3) == 6);
  CHECK(tjurina_hyp(P("x^5+y^5+x^2*y^2"), 2) == 10);
  CHECK(milnor_hyp(P("x^5+y^5+x^2*y^2"), 2) == 11);
  CHECK(corank(P("x^2+y^2+z^2"), 3) == 0);
  CHECK(corank(P("x^3+y^2+z^2"), 3) == 1);
  CHECK(corank(P("x^3+x*y^3+z^2"), 3) == 2);
  CHECK_THROWS_AS(milnor_hyp(P("x^2"), 2), Error);
}

TEST_CASE("errors") {
  try {
    milnor_icis(P("x^2"), P("y^2"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIsolated);
  }
  CHECK_THROWS_AS(tjurina_icis(P("x^2"), P("y^2")), Error);
}

TEST_CASE("hypersurface mu against the linear algebra oracle") {
  for (const char* s : {"x^3+y^4+z^2", "x^2*y+y^5+z^2", "x^3+x*y^3+z^2", "x^3+y^5+z^2", "x^4+y^4+z^2",
                        "x^3+x^2*y^2+y^7+z^2"}) {
    Polynomial f = P(s);
    auto o = oracle::local_colength(jacobian_ideal(f, 3), 3);
    REQUIRE(o);
    CHECK(milnor_hyp(f, 3) == *o);
  }
}

TEST_CASE("tau of an ICIS against the oracle on the hypersurface side") {
  // <f, z>: the module collapses to O/(J(f) + <f, z>).
  Polynomial f = P("x^2+y^3+w^4");
  std::vector<Polynomial> gens = jacobian_ideal(f, 4);
  gens.push_back(f);
  gens[2] = P("z");
  auto o = oracle::local_colength(gens, 4);
  REQUIRE(o);
  CHECK(tjurina_icis(f, P("z")) == *o);
  CHECK(milnor_icis(f, P("z+z^2")) == 6);
}

TEST_CASE("property: mu does not depend on the generic combination") {
  for (const auto& t : acceptance_grid()) {
    if (t.family == Family::Lb) continue;
    auto nf = normal_form(t);
    if (table_invariants(t).mu > 18) continue;
    const Polynomial& f = nf.generators[0];
    const Polynomial& g = nf.generators[1];
    CHECK_MESSAGE(milnor_icis(f, g, kDefaultMuCap, 0) == milnor_icis(f, g, kDefaultMuCap, 7), t.name());
  }
}

TEST_CASE("property: mu and tau are invariant under linear changes") {
  std::vector<SingularityType> sample = {{Family::I, {1, 0}},        make_T(3, 4, 2, 2), {Family::Jprime, {15, 1}},
                                         {Family::Kprime, {11, 1}}, {Family::L, {10, 1}}, {Family::M, {11, 1}}};
  for (const auto& t : sample) {
    auto nf = normal_form(t);
    auto base = icis_invariants(nf.generators[0], nf.generators[1]);
    for (int seed = 0; seed < 20; ++seed) {
      auto I = apply(random_linear_change(seed), nf);
      CHECK_MESSAGE(icis_invariants(I.generators[0], I.generators[1]) == base, t.name() << " seed " << seed);
    }
  }
}

TEST_CASE("property: quasi-homogeneous rows have mu = tau") {
  std::vector<SingularityType> qh = {{Family::I, {1, 0}},   {Family::Kprime, {10}}, {Family::L, {10}},
                                     {Family::M, {11}},     {Family::Jprime, {15}}, {Family::Jprime, {16}},
                                     {Family::Jprime, {17}}, {Family::Jprime, {2, 0}}, make_T(2, 2, 2, 2)};
  for (const auto& t : qh) {
    auto nf = normal_form(t);
    auto r = icis_invariants(nf.generators[0], nf.generators[1]);
    CHECK_MESSAGE(r.mu == r.tau, t.name());
  }
}
