#include <doctest.h>

#include <random>

#include "icis/errors.hpp"
#include "icis/polynomial.hpp"

using namespace icis;

namespace doctest {
template <>
struct StringMaker<Polynomial> {
  static String convert(const Polynomial& p) { return p.to_string().c_str(); }
};
}  // namespace doctest

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

Polynomial random_poly(std::mt19937_64& rng, int terms, int maxdeg) {
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    int left = static_cast<int>(rng() % (maxdeg + 1));
    for (int v = 0; v < kAmbientVars && left > 0; ++v) {
      int e = static_cast<int>(rng() % (left + 1));
      m.set(v, e);
      left -= e;
    }
    Rational c(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
    c.canonicalize();
    t.push_back({m, c});
  }
  return Polynomial::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("parse: grammar cases") {
  CHECK(P("x*y - x*z + w^3").size() == 3);
  Polynomial q = P("y^2 + 2*z^2");
  CHECK(q.size() == 2);
  Monomial z2;
  z2.set(2, 2);
  CHECK(q.coefficient(z2) == 2);
  CHECK(P("x*(y-z)+w^3") == P("x*y-x*z+w^3"));
  CHECK(P("3/4*x^2").coefficient(Monomial{2}) == Rational(3, 4));
  CHECK(P("-(x+y)^2") == P("-x^2-2*x*y-y^2"));
}

TEST_CASE("parse: errors carry kind and position") {
  try {
    parse_polynomial("x + * y");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(e.position() == 4);
  }
  try {
    parse_polynomial("x + q");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_polynomial("(x+y"), ParseError);
}

TEST_CASE("printer round trip") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    Polynomial f = random_poly(rng, 6, 5);
    CHECK(parse_polynomial(f.to_string()) == f);
  }
  CHECK(P("w^3+x*y").to_string() == "w^3 + x*y");
}

TEST_CASE("generator lists") {
  auto g = parse_generators("x*y+z^2, # first\n w^2+x^2\n");
  REQUIRE(g.size() == 2);
  CHECK(g[1] == P("w^2+x^2"));
}

TEST_CASE("jet and order") {
  CHECK(jet(P("x*y-x*z+w^3"), 2) == P("x*y-x*z"));
  CHECK(jet(P("5+x+y^2"), 0) == Polynomial(5));
  CHECK(jet(P("x*y+z^2+y^5"), 2) == P("x*y+z^2"));
  CHECK(order(P("w^3+x*y")) == 2);
  CHECK(order(Polynomial()) == kInfinite);
  CHECK(order(P("y^5+y^2*z^2")) == 4);
}

TEST_CASE("substitute") {
  SubstitutionMap chart;
  chart.set(1, P("x*y")).set(2, P("x*z")).set(3, P("x*w"));
  CHECK(substitute(P("x*y"), chart) == P("x^2*y"));
  CHECK(substitute(P("x+y"), SubstitutionMap::identity()) == P("x+y"));
  SubstitutionMap scale;
  scale.set(3, P("2*w"));
  CHECK(substitute(P("w^3"), scale) == P("8*w^3"));
}

TEST_CASE("property: ring laws, jets, orders") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    Polynomial f = random_poly(rng, 5, 4), g = random_poly(rng, 5, 4), h = random_poly(rng, 4, 3);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    const int d = static_cast<int>(rng() % 5);
    CHECK(jet(jet(f, d), d) == jet(f, d));
    if (!f.is_zero() && !g.is_zero()) CHECK(order(f * g) == order(f) + order(g));
  }
}

TEST_CASE("property: invertible linear substitutions keep the order") {
  std::mt19937_64 rng(9);
  std::array<std::array<Rational, kAmbientVars>, kAmbientVars> m{};
  // unipotent upper triangular, then the last row moved to the top
  for (int i = 0; i < kAmbientVars; ++i)
    for (int j = i; j < kAmbientVars; ++j) m[(i + 1) % kAmbientVars][j] = i == j ? 1 : 2;
  SubstitutionMap s = SubstitutionMap::linear(m);
  for (int k = 0; k < 30; ++k) {
    Polynomial f = random_poly(rng, 5, 5);
    CHECK(order(substitute(f, s)) == order(f));
  }
}
