#include "icis/twojet.hpp"

#include <algorithm>

#include "icis/blowup.hpp"
#include "icis/errors.hpp"
#include "quadric.hpp"

namespace icis {

const char* to_string(TwoJetClass c) {
  switch (c) {
    case TwoJetClass::T2222: return "T2222";
    case TwoJetClass::Tp222: return "Tp222";
    case TwoJetClass::Tpq22: return "Tpq22";
    case TwoJetClass::Tpqr2: return "Tpqr2";
    case TwoJetClass::Tpqrs: return "Tpqrs";
    case TwoJetClass::I: return "I";
    case TwoJetClass::Jprime: return "Jprime";
    case TwoJetClass::Kprime: return "Kprime";
    case TwoJetClass::L: return "L";
    case TwoJetClass::M: return "M";
    case TwoJetClass::None: return "None";
  }
  return "None";
}

namespace {

using linalg::Matrix;
using quadric::Vector;

enum class Kind { Line, Conic, Cubic, Quartic, ConjugateConics };

int degree_of(Kind k) {
  switch (k) {
    case Kind::Line: return 1;
    case Kind::Conic: return 2;
    case Kind::Cubic: return 3;
    default: return 4;
  }
}

struct Piece {
  Kind kind;
  IdealBasis Q;
  int j = 1;
  Polynomial plane;  // conics only
};

struct Decomposition {
  std::vector<Piece> pieces;
  std::optional<bool> tangent;
  std::vector<GermType> curve_types;
};

[[noreturn]] void unsupported(const std::string& why) { throw Error(ErrorKind::UnsupportedTwoJet, why); }

IdealBasis completed(std::vector<Polynomial> gens) { return standard_basis(std::move(gens), OrderingTag::graded()); }

Piece make_piece(Kind k, std::vector<Polynomial> gens, int j = 1) { return {k, completed(std::move(gens)), j, {}}; }

// Two spanning vectors of the line cut out by two independent linear forms.
std::pair<Vector, Vector> line_span(const Polynomial& a, const Polynomial& b) {
  auto k = linalg::kernel({quadric::coefficients_of_linear(a), quadric::coefficients_of_linear(b)}, kAmbientVars);
  return {k[0], k[1]};
}

std::vector<Piece> plane_section(const Polynomial& l, const Polynomial& q) {
  Polynomial c = quadric::restrict_to_hyperplane(q, l);
  Matrix m = quadric::matrix_of(c);
  switch (linalg::rank(m)) {
    case 3: {
      Piece p = make_piece(Kind::Conic, {l, q});
      p.plane = l;
      return {p};
    }
    case 2: {
      auto f = quadric::factor(m);
      if (!f.rational) unsupported("2-jet contains a pair of lines not defined over Q");
      return {make_piece(Kind::Line, {l, f.l1}), make_piece(Kind::Line, {l, f.l2})};
    }
    case 1: unsupported("2-jet is not reduced (double line)");
    default: unsupported("2-jet contains a plane");
  }
}

// Rational members of the pencil of rank <= 2, singular members first found by
// the roots of det(sA + B) (restricted to a complement of a common vertex).
std::vector<Matrix> low_rank_members(const Matrix& A, const Matrix& B) {
  Matrix a = A, b = B;
  UPoly D = quadric::pencil_determinant(a, b);
  if (D.empty()) {
    Matrix stacked = A;
    stacked.insert(stacked.end(), B.begin(), B.end());
    auto K = linalg::kernel(stacked, kAmbientVars);
    if (K.empty()) unsupported("pencil of singular quadrics without a common vertex");
    std::vector<int> idx;
    Matrix span = K;
    for (int i = 0; i < kAmbientVars; ++i) {
      Vector e(kAmbientVars, Rational(0));
      e[i] = 1;
      span.push_back(e);
      if (linalg::rank(span) == static_cast<int>(span.size()))
        idx.push_back(i);
      else
        span.pop_back();
    }
    auto sub = [&](const Matrix& m) {
      Matrix r(idx.size(), Vector(idx.size()));
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r[i][j] = m[idx[i]][idx[j]];
      return r;
    };
    a = sub(A);
    b = sub(B);
    D = quadric::pencil_determinant(a, b);
    if (D.empty()) unsupported("pencil of singular quadrics without a common vertex");
  }
  std::vector<Matrix> out;
  auto consider = [&](Matrix m) {
    if (linalg::rank(m) <= 2) out.push_back(std::move(m));
  };
  if (linalg::determinant(a) == 0) consider(A);
  for (const auto& r : rational_roots(D)) {
    Matrix m = B;
    for (int i = 0; i < kAmbientVars; ++i)
      for (int j = 0; j < kAmbientVars; ++j) m[i][j] += r * A[i][j];
    consider(std::move(m));
  }
  return out;
}

std::vector<Polynomial> linear_elements(const IdealBasis& I) {
  std::vector<Polynomial> out;
  for (const auto& p : I.basis())
    if (p.degree() == 1) out.push_back(p);
  return out;
}

std::optional<std::vector<Polynomial>> line_if_on_curve(std::vector<Polynomial> lin, const Polynomial& q1,
                                                        const Polynomial& q2) {
  IdealBasis line = completed(lin);
  if (contains(line, q1) && contains(line, q2)) return lin;
  return std::nullopt;
}

// A line on the curve spanned by its singular scheme (two distinct singular points).
std::optional<std::vector<Polynomial>> line_through_singular_points(const Polynomial& q1, const Polynomial& q2) {
  std::vector<Polynomial> S{q1, q2};
  for (int i = 0; i < kAmbientVars; ++i)
    for (int k = i + 1; k < kAmbientVars; ++k)
      S.push_back(q1.derivative(i) * q2.derivative(k) - q1.derivative(k) * q2.derivative(i));
  int dim = krull_dim(completed(S));
  if (dim == 0) return std::nullopt;
  if (dim > 1) unsupported("2-jet is not reduced (singular along a curve)");
  for (const char* h : {"x+3*y+7*z+15*w", "2*x-5*y+3*z+w"}) {
    auto lin = linear_elements(saturate(IdealBasis(S, OrderingTag::graded()), parse_polynomial(h)));
    if (lin.size() != 2) continue;
    if (auto line = line_if_on_curve(lin, q1, q2)) return line;
  }
  return std::nullopt;
}

// A line on the curve through the singular point p: directions v in the common
// tangent space with q1(v) = q2(v) = 0.
std::optional<std::vector<Polynomial>> line_through_point(const Polynomial& q1, const Polynomial& q2,
                                                          const Vector& p) {
  Matrix grads;
  for (const auto& q : {q1, q2}) {
    Vector g(kAmbientVars);
    for (int v = 0; v < kAmbientVars; ++v) g[v] = q.derivative(v).evaluate(p);
    grads.push_back(g);
  }
  auto W = linalg::kernel(grads, kAmbientVars);
  if (W.size() != 3) return std::nullopt;
  Matrix span{p};
  std::vector<Vector> u;
  for (const auto& w : W) {
    span.push_back(w);
    if (linalg::rank(span) == static_cast<int>(span.size()))
      u.push_back(w);
    else
      span.pop_back();
  }
  UPoly g;
  bool at_infinity = true;
  for (const auto& q : {q1, q2}) {
    UPoly r = quadric::restrict_to_line(q, u[0], u[1]);
    if (r.back() != 0) at_infinity = false;
    trim(r);
    g = gcd(g, r);
  }
  std::vector<Vector> dirs;
  if (at_infinity) dirs.push_back(u[0]);
  for (const auto& s : rational_roots(g)) {
    Vector v(kAmbientVars);
    for (int i = 0; i < kAmbientVars; ++i) v[i] = s * u[0][i] + u[1][i];
    dirs.push_back(v);
  }
  for (const auto& v : dirs) {
    std::vector<Polynomial> lin;
    for (const auto& k : linalg::kernel({p, v}, kAmbientVars)) lin.push_back(quadric::linear_form(k));
    if (auto line = line_if_on_curve(lin, q1, q2)) return line;
  }
  return std::nullopt;
}

Decomposition split(const Polynomial& q1, const Polynomial& q2) {
  if (q1.is_zero() || q2.is_zero()) unsupported("2-jet has fewer than two quadratic generators");
  Matrix A = quadric::matrix_of(q1), B = quadric::matrix_of(q2);
  {
    Vector va, vb;
    for (int i = 0; i < kAmbientVars; ++i)
      for (int j = 0; j < kAmbientVars; ++j) {
        va.push_back(A[i][j]);
        vb.push_back(B[i][j]);
      }
    if (linalg::rank({va, vb}) < 2) unsupported("2-jet has fewer than two quadratic generators");
  }
  if (krull_dim(completed({q1, q2})) != 2) unsupported("2-jet does not cut out a curve");

  Decomposition out;
  std::optional<std::pair<quadric::Factorization, Polynomial>> conjugate;
  for (const auto& m : low_rank_members(A, B)) {
    const Polynomial& other = (m == A) ? q2 : q1;
    auto f = quadric::factor(m);
    if (!f.rational) {
      if (!conjugate) conjugate.emplace(f, other);
      continue;
    }
    if (linalg::rank({quadric::coefficients_of_linear(f.l1), quadric::coefficients_of_linear(f.l2)}) < 2)
      unsupported("2-jet is not reduced (double plane section)");
    for (const auto& l : {f.l1, f.l2})
      for (auto& p : plane_section(l, other)) out.pieces.push_back(std::move(p));
    for (std::size_t i = 0; i < out.pieces.size(); ++i)
      for (std::size_t k = i + 1; k < out.pieces.size(); ++k)
        if (out.pieces[i].Q.basis() == out.pieces[k].Q.basis()) unsupported("2-jet is not reduced (double line)");
    return out;
  }

  if (conjugate) {
    const auto& [f, other] = *conjugate;
    if (quadric::degenerate_on_conjugate_plane(quadric::matrix_of(other), f.a, f.b, f.disc))
      unsupported("2-jet contains lines not defined over Q");
    out.pieces.push_back(make_piece(Kind::ConjugateConics, {q1, q2}, 2));
    auto [k1, k2] = line_span(quadric::linear_form(f.a), quadric::linear_form(f.b));
    if (quadric::restrict_to_line(other, k1, k2) == UPoly(3, Rational(0))) unsupported("2-jet is not reduced");
    out.tangent = quadric::common_points_on_line({other}, k1, k2) == 1;
    return out;
  }

  auto sing = line_through_singular_points(q1, q2);
  std::vector<SingularPoint> points;
  if (!sing) {
    points = curve_singularities(q1, q2);
    for (const auto& p : points)
      if ((sing = line_through_point(q1, q2, p.point))) break;
  }
  if (auto line = sing) {
    IdealBasis cubic = saturate(IdealBasis({q1, q2}, OrderingTag::graded()), (*line)[0]);
    if (hilbert_polynomial(cubic).scheme_degree() != 3) unsupported("residual of the line is not a cubic curve");
    out.pieces.push_back(make_piece(Kind::Line, *line));
    out.pieces.push_back({Kind::Cubic, cubic, 1, {}});
    auto [k1, k2] = line_span((*line)[0], (*line)[1]);
    out.tangent = quadric::common_points_on_line(cubic.basis(), k1, k2) == 1;
    return out;
  }

  for (const auto& p : points) out.curve_types.push_back(p.type);
  std::sort(out.curve_types.begin(), out.curve_types.end());
  out.pieces.push_back(make_piece(Kind::Quartic, {q1, q2}));
  return out;
}

std::vector<ComponentReport> reports(const std::vector<Piece>& pieces) {
  std::vector<ComponentReport> out;
  for (const auto& p : pieces) out.push_back({p.Q, krull_dim(p.Q), hilbert_polynomial(p.Q), p.j});
  return out;
}

// Lines first, then by degree; ties broken by the printed basis.
void order_pieces(std::vector<Piece>& pieces) {
  auto key = [](const Piece& p) {
    std::string s;
    for (const auto& g : p.Q.basis()) s += g.to_string() + ";";
    return std::make_pair(degree_of(p.kind), s);
  };
  std::sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) { return key(a) < key(b); });
}

bool has_order_two_generator(const IdealBasis& Q) {
  for (const auto& g : Q.basis())
    if (order(g) == 2) return true;
  return false;
}

TwoJetClass resolve(TwoJetAnalysis& r, const Decomposition& dec) {
  int lines = 0, conics = 0, cubics = 0, quartics = 0, conjugate = 0;
  for (const auto& p : dec.pieces) switch (p.kind) {
      case Kind::Line: ++lines; break;
      case Kind::Conic: ++conics; break;
      case Kind::Cubic: ++cubics; break;
      case Kind::Quartic: ++quartics; break;
      case Kind::ConjugateConics: ++conjugate; break;
    }
  const auto& c = r.components;
  if (lines == 4) {
    for (int i = 0; i < 4; ++i)
      for (int k = i + 1; k < 4; ++k) r.pairwise_sum_dims.push_back(krull_dim(ideal_sum(c[i].Q, c[k].Q)));
    std::sort(r.pairwise_sum_dims.begin(), r.pairwise_sum_dims.end());
    if (r.pairwise_sum_dims == std::vector<int>{1, 1, 1, 1, 1, 1}) return TwoJetClass::I;
    if (r.pairwise_sum_dims == std::vector<int>{0, 0, 1, 1, 1, 1}) return TwoJetClass::Tpqrs;
    r.diagnostics.push_back("four lines in an untabulated position");
    return TwoJetClass::None;
  }
  if (lines == 2 && conics == 1) {
    IdealBasis meet = ideal_sum(c[0].Q, c[1].Q);
    r.containment = ideal_contains(meet, c[2].Q);
    r.order_two_generator = has_order_two_generator(c[2].Q);
    if (krull_dim(meet) != 1) {
      r.diagnostics.push_back("the two lines of the 2-jet are skew");
      return TwoJetClass::None;
    }
    if (!*r.order_two_generator) return TwoJetClass::None;
    return *r.containment ? TwoJetClass::M : TwoJetClass::Tpqr2;
  }
  if (conics == 2) {
    auto [k1, k2] = line_span(dec.pieces[0].plane, dec.pieces[1].plane);
    // the conics meet on the common line of their planes
    std::vector<Polynomial> forms;
    for (const auto& g : dec.pieces[0].Q.basis())
      if (g.degree() == 2) forms.push_back(g);
    r.tangent = quadric::common_points_on_line(forms, k1, k2) == 1;
    return *r.tangent ? TwoJetClass::Kprime : TwoJetClass::Tpq22;
  }
  if (conjugate == 1) return *dec.tangent ? TwoJetClass::Kprime : TwoJetClass::Tpq22;
  if (lines == 1 && cubics == 1) {
    if (*dec.tangent) return TwoJetClass::L;
    r.diagnostics.push_back("twisted cubic with a secant line");
    return TwoJetClass::None;
  }
  if (quartics == 1) {
    const auto& t = dec.curve_types;
    if (t.empty()) return TwoJetClass::T2222;
    if (t == std::vector<GermType>{GermType::A(1)}) return TwoJetClass::Tp222;
    if (t == std::vector<GermType>{GermType::A(2)}) return TwoJetClass::Jprime;
    r.diagnostics.push_back("irreducible quartic 2-jet with untabulated singularities");
    return TwoJetClass::None;
  }
  r.diagnostics.push_back("untabulated 2-jet configuration");
  return TwoJetClass::None;
}

}  // namespace

std::vector<ComponentReport> decompose_two_quadrics(const IdealBasis& I2) {
  if (I2.generators.size() != 2) throw Error(ErrorKind::InvalidInput, "expected two quadratic generators");
  Decomposition dec = split(I2.generators[0], I2.generators[1]);
  order_pieces(dec.pieces);
  return reports(dec.pieces);
}

TwoJetAnalysis classify_two_jet(const Polynomial& f, const Polynomial& g) {
  TwoJetAnalysis r;
  Polynomial q1 = f.homogeneous_part(2), q2 = g.homogeneous_part(2);
  try {
    Decomposition dec = split(q1, q2);
    order_pieces(dec.pieces);
    r.components = reports(dec.pieces);
    r.s = static_cast<int>(r.components.size());
    r.t = r.s;
    r.tangent = dec.tangent;
    r.curve_types = dec.curve_types;
    r.cls = resolve(r, dec);
  } catch (const Error& e) {
    r.cls = TwoJetClass::None;
    r.diagnostics.push_back(e.what());
  }
  return r;
}

TwoJetAnalysis classify_two_jet(const IdealBasis& I) {
  if (I.generators.size() != 2) throw Error(ErrorKind::InvalidInput, "expected two generators");
  return classify_two_jet(I.generators[0], I.generators[1]);
}

}  // namespace icis
