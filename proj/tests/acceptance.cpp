// Acceptance suite: one PASS/FAIL line per criterion, details for failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "golden.hpp"
#include "icis/catalogue.hpp"
#include "icis/errors.hpp"
#include "icis/report.hpp"
#include "oracle.hpp"

using namespace icis;

namespace {

constexpr int kSeeds = 10;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string s) {
    pass = false;
    failures.push_back(std::move(s));
  }
};

Polynomial P(const char* s) { return parse_polynomial(s); }

std::string table_report() {
  std::ostringstream out;
  for (const auto& t : acceptance_grid()) out << format_text(table_row(t)) << "\n";
  return out.str();
}

std::string round_trip_report() {
  std::ostringstream out;
  for (const auto& t : acceptance_grid())
    for (int seed = 0; seed < kSeeds; ++seed) {
      std::string got;
      try {
        got = classify(apply(random_linear_change(seed), normal_form(t))).name();
      } catch (const Error& e) {
        got = std::string("error: ") + e.what();
      }
      out << t.name() << " seed " << seed << " -> " << got << "\n";
    }
  return out.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string report1, report2;

Outcome table_fidelity() {
  Outcome o;
  report1 = table_report();
  int n = 0;
  for (const auto& l : lines(report1)) {
    ++n;
    if (l.rfind("PASS", 0) != 0) o.fail(l);
  }
  o.summary = std::to_string(n - static_cast<int>(o.failures.size())) + "/" + std::to_string(n) + " rows";
  return o;
}

Outcome round_trip() {
  Outcome o;
  report2 = round_trip_report();
  int n = 0;
  for (const auto& l : lines(report2)) {
    ++n;
    auto arrow = l.find(" -> ");
    auto name = l.substr(0, l.find(" seed "));
    if (l.substr(arrow + 4) != name) o.fail(l);
  }
  o.summary = std::to_string(n - static_cast<int>(o.failures.size())) + "/" + std::to_string(n) + " classifications";
  return o;
}

Outcome golden_bundles() {
  Outcome o;
  int ok = 0;
  for (const auto& b : golden::two_jets()) {
    auto a = classify_two_jet(P(b.f), P(b.g));
    std::vector<std::string> got, want;
    for (const auto& c : a.components)
      got.push_back(std::to_string(c.d) + ":" + c.h.to_string() + ":" + std::to_string(c.j));
    for (const auto& c : b.components) want.push_back(std::to_string(c.d) + ":" + c.h + ":" + std::to_string(c.j));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    std::vector<std::string> ct;
    for (const auto& t : a.curve_types) ct.push_back(t.to_string());
    bool same = std::string(to_string(a.cls)) == b.cls && a.s == b.s && a.t == b.t && got == want &&
                a.pairwise_sum_dims == b.pairwise_sum_dims && a.containment == b.containment &&
                a.tangent == b.tangent && ct == b.curve_types;
    if (same)
      ++ok;
    else
      o.fail(std::string(b.cls) + ": got class " + to_string(a.cls));
  }
  o.summary = std::to_string(ok) + "/10 forms";
  return o;
}

Outcome germ_types() {
  Outcome o;
  std::vector<std::pair<Polynomial, GermType>> cases;
  for (int k = 1; k <= 12; ++k) cases.push_back({P("x^2+y^2") + Polynomial::variable(2, k + 1), GermType::A(k)});
  for (int k = 4; k <= 10; ++k) cases.push_back({P("x^2+z*y^2") + Polynomial::variable(2, k - 1), GermType::D(k)});
  cases.push_back({P("x^3+y^4+z^2"), GermType::E(6)});
  cases.push_back({P("x^3+x*y^3+z^2"), GermType::E(7)});
  cases.push_back({P("x^3+y^5+z^2"), GermType::E(8)});
  int ok = 0;
  for (const auto& [f, want] : cases) {
    GermType got = classify_hypersurface(f, 3);
    if (got == want)
      ++ok;
    else
      o.fail(f.to_string() + ": " + got.to_string() + ", expected " + want.to_string());
  }
  o.summary = std::to_string(ok) + "/" + std::to_string(cases.size()) + " germs";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int compared = 0, generic = 0, grid = 0;
  auto compare = [&](const std::string& what, const std::vector<Polynomial>& gens) {
    int v = local_vdim(gens, 30);
    if (v == kInfinite) return;
    auto r = oracle::local_colength(gens, kAmbientVars, 6000);
    if (!r) return;
    ++compared;
    if (*r != v) o.fail(what + ": vdim " + std::to_string(v) + ", oracle " + std::to_string(*r));
  };
  for (const auto& t : acceptance_grid()) {
    IdealBasis nf;
    try {
      nf = normal_form(t);
    } catch (const Error&) {
      continue;
    }
    ++grid;
    const Polynomial &f = nf.generators[0], &g = nf.generators[1];
    // the ideals behind mu and tau: <f, g> + minors, and J(f + 2g)
    Polynomial h = f + Rational(2) * g;
    std::vector<Polynomial> jac, lg{h};
    for (int i = 0; i < kAmbientVars; ++i) jac.push_back(h.derivative(i));
    for (int i = 0; i < kAmbientVars; ++i)
      for (int j = i + 1; j < kAmbientVars; ++j)
        lg.push_back(h.derivative(i) * g.derivative(j) - h.derivative(j) * g.derivative(i));
    compare(t.name() + " J(h)", jac);
    compare(t.name() + " <h, minors>", lg);
    std::vector<Polynomial> sing{f, g};
    for (int i = 0; i < kAmbientVars; ++i)
      for (int j = i + 1; j < kAmbientVars; ++j)
        sing.push_back(f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i));
    compare(t.name() + " singular locus", sing);

    int mu0 = milnor_icis(f, g, kDefaultMuCap, 0), mu1 = milnor_icis(f, g, kDefaultMuCap, 1);
    if (mu0 == mu1)
      ++generic;
    else
      o.fail(t.name() + ": mu " + std::to_string(mu0) + " vs " + std::to_string(mu1));
  }
  o.summary = std::to_string(compared) + " ideals against the oracle, mu genericity " + std::to_string(generic) + "/" +
              std::to_string(grid);
  if (compared == 0) o.fail("no ideal was small enough to compare");
  return o;
}

Outcome negatives() {
  Outcome o;
  int ok = 0;
  auto expect_error = [&](const char* f, const char* g, ErrorKind want) {
    try {
      auto r = classify(P(f), P(g));
      o.fail(std::string("<") + f + ", " + g + "> classified as " + r.name());
    } catch (const Error& e) {
      if (e.kind() == want)
        ++ok;
      else
        o.fail(std::string("<") + f + ", " + g + ">: " + to_string(e.kind()));
    }
  };
  expect_error("x^2", "y^2", ErrorKind::NotIsolated);
  expect_error("x+y^2+z^3", "z*w+x^2+y^3", ErrorKind::Hypersurface);
  // 2-jet <x^2, xy>, isolated
  const char *f = "x^2+z^3+w^3", *g = "x*y+y^3+z^3-w^3";
  try {
    auto r = classify(P(f), P(g));
    if (!r.unimodular() && r.twojet.cls == TwoJetClass::None && r.invariants.mu > 0)
      ++ok;
    else
      o.fail(std::string("<") + f + ", " + g + "> classified as " + r.name());
  } catch (const Error& e) {
    o.fail(std::string("<") + f + ", " + g + ">: " + e.what());
  }
  o.summary = std::to_string(ok) + "/3 cases";
  return o;
}

Outcome determinism() {
  Outcome o;
  if (table_report() != report1) o.fail("table report differs between runs");
  if (round_trip_report() != report2) o.fail("round-trip report differs between runs");
  o.summary = o.pass ? "both reports byte-identical" : "reports differ";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"table fidelity", table_fidelity},        {"round-trip classification", round_trip},
      {"two-jet golden bundles", golden_bundles}, {"blow-up germ types", germ_types},
      {"oracle equivalence", oracle_equivalence}, {"negative cases", negatives},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream time;
    time.precision(1);
    time << std::fixed << secs << "s";
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].title << "  "
              << o.summary << "  (" << time.str() << ")\n";
    for (const auto& l : o.failures) std::cout << "    " << l << "\n";
    std::cout << std::flush;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
