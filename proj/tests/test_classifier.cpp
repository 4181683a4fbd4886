#include <doctest.h>

#include "icis/classifier.hpp"
#include "icis/errors.hpp"

using namespace icis;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

GermType A(int k) { return GermType::A(k); }
GermType D(int k) { return GermType::D(k); }
GermType E(int k) { return GermType::E(k); }

std::string N(const std::optional<SingularityType>& t) { return t ? t->name() : "-"; }

}  // namespace

TEST_CASE("I branches") {
  CHECK(N(classify_I(13, 13, {A(1)})) == "I_{1,0}");
  CHECK(N(classify_I(13, 12, {A(1)})) == "I_{1,0,1}");
  CHECK(N(classify_I(14, 12, {A(2)})) == "I_{1,1}");
  CHECK(N(classify_I(16, 14, {A(4)})) == "I_{1,3}");
  CHECK(N(classify_I(14, 13, {A(2)})) == "-");
  CHECK(N(classify_I(13, 13, {})) == "-");
}

TEST_CASE("T branches") {
  CHECK(N(classify_T(7, 7, TwoJetClass::T2222, {})) == "T_{2,2,2,2}");
  CHECK(N(classify_T(9, 8, TwoJetClass::Tp222, {A(1)})) == "T_{4,2,2,2}");
  CHECK(N(classify_T(8, 7, TwoJetClass::Tp222, {})) == "T_{3,2,2,2}");
  CHECK(N(classify_T(12, 11, TwoJetClass::Tpqrs, {A(1)})) == "T_{3,3,3,4}");
  CHECK(N(classify_T(13, 12, TwoJetClass::Tpqr2, {A(1), A(2)})) == "T_{3,4,5,2}");
  CHECK(N(classify_T(12, 12, TwoJetClass::Tpqrs, {A(1)})) == "-");
  CHECK(N(classify_T(9, 8, TwoJetClass::Tp222, {A(1), A(1)})) == "-");
  CHECK(N(classify_T(9, 8, TwoJetClass::Tp222, {D(4)})) == "-");
  // mu must equal the index sum minus one
  CHECK(N(classify_T(10, 9, TwoJetClass::Tp222, {A(1)})) == "-");
}

TEST_CASE("J' branches") {
  CHECK(N(classify_Jprime(15, 15, {E(6)})) == "J'_{15}");
  CHECK(N(classify_Jprime(15, 14, {E(6)})) == "J'_{15,1}");
  CHECK(N(classify_Jprime(17, 15, {E(8)})) == "J'_{17,2}");
  CHECK(N(classify_Jprime(15, 12, {E(6)})) == "-");
  CHECK(N(classify_Jprime(13, 13, {D(4)})) == "J'_{2,0}");
  CHECK(N(classify_Jprime(14, 13, {D(5)})) == "J'_{2,1}");
  CHECK(N(classify_Jprime(19, 19, {GermType::J(1, 0)})) == "J'_{3,0}");
  CHECK(N(classify_Jprime(21, 18, {GermType::J(1, 2)})) == "J'_{3,2}");
  CHECK(N(classify_Jprime(19, 18, {GermType::J(1, 0)})) == "-");
  CHECK(N(classify_Jprime(16, 16, {E(6)})) == "-");
}

TEST_CASE("K' branches") {
  CHECK(N(classify_Kprime(10, 10, {})) == "K'_{10}");
  CHECK(N(classify_Kprime(10, 9, {})) == "K'_{10,1}");
  CHECK(N(classify_Kprime(13, 13, {A(3)})) == "K'_{1,0}");
  CHECK(N(classify_Kprime(13, 12, {A(3)})) == "K'_{1,0,1}");
  CHECK(N(classify_Kprime(15, 13, {D(5)})) == "K'_{15,2}");
  CHECK(N(classify_Kprime(16, 14, {A(6)})) == "K^b_{1,3}");
  CHECK(N(classify_Kprime(16, 14, {D(6)})) == "K'_{1,3}");
  CHECK(N(classify_Kprime(16, 14, {E(6)})) == "K'_{16,2}");
  CHECK(N(classify_Kprime(10, 8, {})) == "-");
  CHECK(N(classify_Kprime(12, 12, {A(2)})) == "-");
}

TEST_CASE("L branches") {
  CHECK(N(classify_L(10, 9, {})) == "L_{10,1}");
  CHECK(N(classify_L(13, 12, {A(3)})) == "L_{1,0,1}");
  CHECK(N(classify_L(16, 14, {E(6)})) == "L_{16,2}");
  CHECK(N(classify_L(15, 15, {D(5)})) == "L_{15}");
  CHECK(N(classify_L(17, 15, {A(7)})) == "L^b_{1,4}");
}

TEST_CASE("M branches") {
  CHECK(N(classify_M(11, 11, {})) == "M_{11}");
  CHECK(N(classify_M(11, 10, {})) == "M_{11,1}");
  CHECK(N(classify_M(13, 12, {A(2)})) == "M_{1,0,1}");
  CHECK(N(classify_M(15, 13, {D(4)})) == "M_{15,2}");
  CHECK(N(classify_M(15, 14, {D(4)})) == "M_{15,1}");
  CHECK(N(classify_M(16, 14, {A(5)})) == "M_{1,3}");
  CHECK(N(classify_M(11, 9, {})) == "-");
}

TEST_CASE("dispatch") {
  CHECK(N(classify_invariants(TwoJetClass::None, 13, 13, {A(1)})) == "-");
  CHECK(N(classify_invariants(TwoJetClass::Kprime, 10, 10, {})) == "K'_{10}");
  CHECK(N(classify_invariants(TwoJetClass::L, 10, 10, {})) == "L_{10}");
}

TEST_CASE("classify: full pipeline") {
  CHECK(classify(P("x*y-x*z+w^3"), P("y*z-x*y+2*w^3")).name() == "I_{1,0}");
  CHECK(classify(P("x*y+z^2"), P("x^2+w^2+z*y^2")).name() == "K'_{11}");
  CHECK(classify(P("x*y+z^2+w^2"), P("z*w+x^2+y^2")).name() == "T_{2,2,2,2}");
  auto r = classify(P("w*z+x*y"), P("y^2+x*z+w^3+y*w^2"));
  CHECK(r.name() == "L_{10,1}");
  CHECK(r.invariants.mu == 10);
  CHECK(r.invariants.tau == 9);
  CHECK(r.twojet.cls == TwoJetClass::L);
}

TEST_CASE("classify: rejected inputs") {
  auto kind = [](const char* f, const char* g) {
    try {
      classify(P(f), P(g));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalInconsistency;
  };
  CHECK(kind("x^2", "y^2") == ErrorKind::NotIsolated);
  CHECK(kind("x+y^2", "z*w+x^2") == ErrorKind::Hypersurface);
  CHECK(kind("1+x", "y^2") == ErrorKind::InvalidInput);
  CHECK(kind("0", "x*y+z^2") == ErrorKind::NotCompleteIntersection);
}

TEST_CASE("classify: isolated but not unimodular") {
  // 2-jet <x^2, xy> is outside the tabulated configurations
  auto r = classify(P("x^2+z^3+w^3"), P("x*y+y^3+z^3-w^3"));
  CHECK_FALSE(r.unimodular());
  CHECK(r.name() == "not unimodular");
  CHECK_FALSE(r.diagnostics.empty());
  // T2222 is 2-determined
  auto r2 = classify(P("x*y+z^2+w^2"), P("z*w+x^2+y^2+x^5"));
  CHECK(r2.name() == "T_{2,2,2,2}");
}
