#include <doctest.h>

#include <algorithm>

#include "golden.hpp"
#include "icis/catalogue.hpp"
#include "icis/twojet.hpp"

using namespace icis;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<std::string> bundle_of(const TwoJetAnalysis& a) {
  std::vector<std::string> out;
  for (const auto& c : a.components)
    out.push_back(std::to_string(c.d) + ":" + c.h.to_string() + ":" + std::to_string(c.j));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> bundle_of(const golden::Bundle& b) {
  std::vector<std::string> out;
  for (const auto& c : b.components) out.push_back(std::to_string(c.d) + ":" + c.h + ":" + std::to_string(c.j));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("golden bundles of the ten 2-jet forms") {
  for (const auto& b : golden::two_jets()) {
    auto a = classify_two_jet(P(b.f), P(b.g));
    INFO(b.cls);
    CHECK(std::string(to_string(a.cls)) == b.cls);
    CHECK(a.s == b.s);
    CHECK(a.t == b.t);
    CHECK(bundle_of(a) == bundle_of(b));
    CHECK(a.pairwise_sum_dims == b.pairwise_sum_dims);
    CHECK(a.containment == b.containment);
    CHECK(a.tangent == b.tangent);
    std::vector<std::string> ct;
    for (const auto& t : a.curve_types) ct.push_back(t.to_string());
    CHECK(ct == b.curve_types);
  }
}

TEST_CASE("decompose_two_quadrics examples") {
  auto c = decompose_two_quadrics(IdealBasis({P("x*y"), P("z*w")}));
  CHECK(c.size() == 4);
  for (const auto& q : c) {
    CHECK(q.d == 2);
    CHECK(q.h.to_string() == "1+t");
    CHECK(q.j == 1);
  }
  auto k = decompose_two_quadrics(IdealBasis({P("x*y+z^2"), P("w^2+x^2")}));
  REQUIRE(k.size() == 1);
  CHECK(k[0].j == 2);
  auto j = decompose_two_quadrics(IdealBasis({P("x*y+z^2"), P("w^2+x*z")}));
  REQUIRE(j.size() == 1);
  CHECK(j[0].h.to_string() == "4t");
  CHECK(j[0].j == 1);
}

TEST_CASE("higher order terms do not change the class") {
  CHECK(classify_two_jet(P("x*y-x*z+w^3"), P("y*z-x*y+2*w^3")).cls == TwoJetClass::I);
  CHECK(classify_two_jet(P("w*y+x^2-z^2+y^5"), P("w*x+y^3")).cls == TwoJetClass::M);
  CHECK(classify_two_jet(P("x^2+y^2+z^2"), P("y^2+2*z^2+w^2")).cls == TwoJetClass::T2222);
}

TEST_CASE("degenerate 2-jets get None") {
  CHECK(classify_two_jet(P("x^2"), P("y^2")).cls == TwoJetClass::None);
  CHECK(classify_two_jet(P("x^2+y^3"), P("x*y")).cls == TwoJetClass::None);
  CHECK(classify_two_jet(P("x^3"), P("y^3+z^3")).cls == TwoJetClass::None);
}

TEST_CASE("property: class is stable under 20 linear changes") {
  for (const auto& b : golden::two_jets()) {
    IdealBasis I({P(b.f), P(b.g)});
    for (int seed = 0; seed < 20; ++seed) {
      auto a = classify_two_jet(apply(random_linear_change(seed), I));
      CHECK_MESSAGE(std::string(to_string(a.cls)) == b.cls, b.cls << " seed " << seed);
    }
  }
}

TEST_CASE("property: component degrees add up to 4") {
  for (const auto& b : golden::two_jets()) {
    auto a = classify_two_jet(P(b.f), P(b.g));
    Rational total = 0;
    for (const auto& c : a.components) total += c.h.scheme_degree();
    CHECK_MESSAGE(total == 4, b.cls);
  }
}
