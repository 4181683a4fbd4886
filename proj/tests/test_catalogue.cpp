#include <doctest.h>

#include <set>

#include "icis/catalogue.hpp"
#include "icis/errors.hpp"

using namespace icis;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

// cofactor expansion, independent of the library's elimination
Rational det(const std::vector<std::vector<Rational>>& m) {
  if (m.size() == 1) return m[0][0];
  Rational d = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

Rational det4(const Matrix4& m) {
  std::vector<std::vector<Rational>> v;
  for (const auto& row : m) v.emplace_back(row.begin(), row.end());
  return det(v);
}

// frozen output of random_matrix(0)
const int kSeedZeroRows[4][4] = {{0, 0, 0, 3}, {2, -1, 1, 2}, {3, -2, -2, -2}, {1, 0, 1, -1}};

ErrorKind kind_of(const SingularityType& t, std::optional<Rational> lam = std::nullopt) {
  try {
    normal_form(t, lam);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("l_i") {
  CHECK(l_poly(0, P("x"), P("w")) == P("x"));
  CHECK(l_poly(1, P("x"), P("w")) == P("w^2"));
  CHECK(l_poly(2, P("x"), P("w")) == P("x*w"));
  CHECK(l_poly(5, P("x"), P("w")) == P("w^4"));
}

TEST_CASE("normal forms") {
  auto I11 = normal_form({Family::I, {1, 1}});
  CHECK(I11.generators[0] == P("x*(y-z)+w^3"));
  CHECK(I11.generators[1] == P("y*(z-x)+w^2*x"));
  auto K = normal_form({Family::Kprime, {16, 2}});
  CHECK(K.generators[0] == P("x*y+z^2"));
  CHECK(K.generators[1] == P("w^2+x^2+y^5+y^2*z^2"));
  auto T = normal_form(make_T(3, 4, 5, 2));
  CHECK(T.generators[0] == P("x*y+z^5+w^2"));
  CHECK(T.generators[1] == P("z*w+x^3+y^4"));
  CHECK(normal_form({Family::I, {1, 0}}, Rational(3)).generators[1] == P("y*(z-x)+3*w^3"));
  CHECK(normal_form(make_T(2, 2, 2, 2)).generators[1] == P("y^2+2*z^2+w^2"));
}

TEST_CASE("normal form errors") {
  CHECK(kind_of({Family::I, {1, 0}}, Rational(1)) == ErrorKind::ExcludedModulus);
  CHECK(kind_of(make_T(2, 2, 2, 2), Rational(0)) == ErrorKind::ExcludedModulus);
  CHECK(kind_of({Family::Jprime, {2, 0}}, Rational(-4, 27)) == ErrorKind::ExcludedModulus);
  CHECK(kind_of({Family::Kprime, {1, 0}}, Rational(1, 4)) == ErrorKind::ExcludedModulus);
  CHECK(kind_of({Family::L, {1, 0}}, Rational(-1)) == ErrorKind::ExcludedModulus);
  CHECK(kind_of({Family::Kprime, {10}}, Rational(3)) == ErrorKind::InvalidInput);
  CHECK(kind_of({Family::Lb, {1, 2}}) == ErrorKind::UnknownNormalForm);
  CHECK(kind_of({Family::L, {1, 2}}) == ErrorKind::UnknownNormalForm);
  CHECK(kind_of({Family::Kprime, {12}}) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of({Family::I, {2, 0}}) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of({Family::Jprime, {18}}) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("names") {
  CHECK(SingularityType{Family::Jprime, {3, 0}}.name() == "J'_{3,0}");
  CHECK(SingularityType{Family::Kb, {1, 3}}.name() == "K^b_{1,3}");
  CHECK(make_T(5, 2, 3, 4).name() == "T_{3,4,5,2}");
  CHECK(make_T(2, 2, 3, 2).name() == "T_{3,2,2,2}");
  CHECK(parse_singularity_type("Kb_{1,2}") == SingularityType{Family::Kb, {1, 2}});
  CHECK(parse_singularity_type("J′_{15,1}") == SingularityType{Family::Jprime, {15, 1}});
  CHECK_THROWS_AS(parse_singularity_type("Q_{1}"), Error);
  CHECK(SingularityType{Family::I, {1, 0}}.has_modulus());
  CHECK(SingularityType{Family::Jprime, {3, 0}}.has_modulus());
  CHECK_FALSE(SingularityType{Family::Jprime, {15, 0}}.has_modulus());
  CHECK_FALSE(make_T(3, 2, 2, 2).has_modulus());
  for (const auto& t : acceptance_grid()) CHECK(parse_singularity_type(t.name()) == t);
}

TEST_CASE("acceptance grid") {
  auto g = acceptance_grid();
  CHECK(g.size() == 105);
  CHECK(std::set<SingularityType>(g.begin(), g.end()).size() == g.size());
  CHECK(acceptance_grid(Family::M).size() == 9);
  CHECK(acceptance_grid(Family::Kprime).size() == 18);
}

TEST_CASE("table invariants carry the corrections") {
  CHECK(table_invariants({Family::L, {1, 0}}) == InvariantRecord{13, 13});
  CHECK(table_invariants({Family::L, {15}}) == InvariantRecord{15, 15});
  CHECK(table_invariants({Family::I, {1, 2}}) == InvariantRecord{15, 13});
  CHECK(table_invariants(make_T(3, 4, 5, 2)) == InvariantRecord{13, 12});
}

TEST_CASE("random linear changes") {
  const Matrix4 id = random_matrix(-1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
  const Matrix4 m0 = random_matrix(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m0[i][j] == kSeedZeroRows[i][j]);
  for (int seed = 0; seed < 50; ++seed) {
    Matrix4 m = random_matrix(seed);
    CHECK(m == random_matrix(seed));
    CHECK(det4(m) != 0);
    for (const auto& row : m)
      for (const auto& e : row) CHECK((e >= -3 && e <= 3));
  }
  CHECK(random_matrix(1) != random_matrix(2));
}
