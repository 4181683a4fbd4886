// icis: classify unimodular complete intersection surface singularities.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>

#include "icis/catalogue.hpp"
#include "icis/errors.hpp"
#include "icis/report.hpp"

using namespace icis;
using nlohmann::json;

namespace {

enum Exit { kUnimodular = 0, kNotUnimodular = 1, kInputError = 2, kNotIcis = 3 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownVariable:
    case ErrorKind::InvalidInput:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::ExcludedModulus:
    case ErrorKind::UnknownNormalForm: return kInputError;
    case ErrorKind::NotIsolated:
    case ErrorKind::NotCompleteIntersection:
    case ErrorKind::Hypersurface: return kNotIcis;
    default: return kNotUnimodular;
  }
}

// Results in input order, computed on up to `jobs` threads.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F fn) {
  std::vector<T> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) out[i] = fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string read_input(const std::string& file, const std::string& inline_text) {
  if (!inline_text.empty()) return inline_text;
  if (file.empty() || file == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Family parse_family(const std::string& s) {
  if (s == "I") return Family::I;
  if (s == "T") return Family::T;
  if (s == "J'" || s == "Jprime" || s == "J") return Family::Jprime;
  if (s == "K'" || s == "Kprime" || s == "K") return Family::Kprime;
  if (s == "L") return Family::L;
  if (s == "M") return Family::M;
  throw Error(ErrorKind::InvalidInput, "unknown family '" + s + "'");
}

struct ClassifyArgs {
  std::string file, expr;
  bool json = false, verify = false;
  std::uint64_t seed = 0;
  int mu_cap = kDefaultMuCap;
};

int cmd_classify(const ClassifyArgs& a) {
  try {
    auto gens = parse_generators(read_input(a.file, a.expr));
    if (gens.size() != 2)
      throw Error(ErrorKind::InvalidInput, "expected two generators, got " + std::to_string(gens.size()));
    ClassifyOptions opt;
    opt.mu_cap = a.mu_cap;
    opt.seed = a.seed;
    opt.verify = a.verify;
    auto r = classify(gens[0], gens[1], opt);
    if (a.json) {
      json j = to_json(r);
      j["input"] = {gens[0].to_string(), gens[1].to_string()};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_text(r);
    }
    return r.unimodular() ? kUnimodular : kNotUnimodular;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

struct TablesArgs {
  std::string family;
  bool json = false;
  int mu_cap = kDefaultMuCap;
  unsigned jobs = default_jobs();
};

int cmd_tables(const TablesArgs& a) {
  std::vector<SingularityType> grid;
  try {
    grid = a.family.empty() ? acceptance_grid() : acceptance_grid(parse_family(a.family));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  auto rows = parallel_map<TableRow>(grid.size(), a.jobs, [&](std::size_t i) { return table_row(grid[i], a.mu_cap); });
  int passed = static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.pass; }));
  if (a.json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : rows) std::cout << format_text(r) << "\n";
    std::cout << passed << "/" << rows.size() << " rows match the tables\n";
  }
  return 0;
}

// Mismatches that follow from the tables themselves; reported as XFAIL.
const std::set<std::string> kTableDeviations = {"J'_{3,1}", "J'_{3,2}"};
const std::set<std::string> kRoundTripCollisions = {"K'_{1,2}"};

struct SelftestArgs {
  std::int64_t seed = 0;
  int seeds = 1;
  unsigned jobs = default_jobs();
  bool inject = false;
};

struct Check {
  std::string line;
  bool failed = false;
};

Check verdict(const std::string& what, bool ok, bool expected_failure, const std::string& detail) {
  std::string tag = ok ? (expected_failure ? "XPASS" : "PASS ") : (expected_failure ? "XFAIL" : "FAIL ");
  return {tag + " " + what + (detail.empty() ? "" : "  " + detail), ok == expected_failure};
}

int cmd_selftest(const SelftestArgs& a) {
  auto grid = acceptance_grid();
  std::vector<Check> checks;

  auto rows = parallel_map<TableRow>(grid.size(), a.jobs, [&](std::size_t i) { return table_row(grid[i]); });
  for (const auto& r : rows)
    checks.push_back(verdict("table " + r.type.name(), r.pass, kTableDeviations.count(r.type.name()) > 0,
                             "mu=" + std::to_string(r.computed.mu) + " tau=" + std::to_string(r.computed.tau)));

  struct Job {
    SingularityType t;
    std::int64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& t : grid)
    for (int k = 0; k < a.seeds; ++k) jobs.push_back({t, a.seed + k});
  auto names = parallel_map<std::string>(jobs.size(), a.jobs, [&](std::size_t i) {
    try {
      IdealBasis I = apply(random_linear_change(jobs[i].seed), normal_form(jobs[i].t));
      return classify(I).name();
    } catch (const Error& e) {
      return std::string("error: ") + e.what();
    }
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    std::string want = jobs[i].t.name();
    if (a.inject && i == 0) want += "*";
    checks.push_back(verdict("round-trip " + jobs[i].t.name() + " seed " + std::to_string(jobs[i].seed),
                             names[i] == want, kRoundTripCollisions.count(jobs[i].t.name()) > 0, "-> " + names[i]));
  }

  auto mixed = parallel_map<std::string>(grid.size(), a.jobs, [&](std::size_t i) {
    try {
      IdealBasis nf = normal_form(grid[i]);
      std::string plain = classify(nf).name();
      std::string sum = classify(nf.generators[0] + nf.generators[1], nf.generators[1]).name();
      int mu0 = milnor_icis(nf.generators[0], nf.generators[1], kDefaultMuCap, 0);
      int mu1 = milnor_icis(nf.generators[0], nf.generators[1], kDefaultMuCap, 1);
      return plain == sum && mu0 == mu1 ? std::string() : plain + " / " + sum;
    } catch (const Error& e) {
      return std::string("error: ") + e.what();
    }
  });
  for (std::size_t i = 0; i < grid.size(); ++i)
    checks.push_back(verdict("mixing+genericity " + grid[i].name(), mixed[i].empty(), false, mixed[i]));

  int failed = 0;
  for (const auto& c : checks) {
    std::cout << c.line << "\n";
    failed += c.failed;
  }
  std::cout << (failed ? "selftest FAILED: " : "selftest passed: ") << checks.size() - failed << "/" << checks.size()
            << " checks as expected\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify unimodular isolated complete intersection surface singularities <f, g> in Q[x,y,z,w]"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "classify the ideal <f, g>");
  classify_cmd->add_option("file", ca.file, "file with two generators ('-' for stdin)");
  classify_cmd->add_option("-e,--expr", ca.expr, "generators inline, e.g. \"x*y+z^2, w^2+x^2+y^3\"");
  classify_cmd->add_flag("--json", ca.json, "emit JSON");
  classify_cmd->add_option("--seed", ca.seed, "seed for the generic combination");
  classify_cmd->add_option("--mu-cap", ca.mu_cap, "bound on Milnor numbers")->check(CLI::Range(20, 120));
  classify_cmd->add_flag("--verify", ca.verify, "recompute mu with a second generic combination");

  TablesArgs ta;
  auto* tables_cmd = app.add_subcommand("tables", "recompute mu and tau of the tabulated normal forms");
  tables_cmd->add_option("--family", ta.family, "I, T, J', K', L or M");
  tables_cmd->add_flag("--json", ta.json, "emit JSON");
  tables_cmd->add_option("--mu-cap", ta.mu_cap, "bound on Milnor numbers")->check(CLI::Range(20, 120));
  tables_cmd->add_option("-j,--jobs", ta.jobs, "worker threads");

  SelftestArgs sa;
  auto* selftest_cmd = app.add_subcommand("selftest", "round trips, tables and invariance checks");
  selftest_cmd->add_option("--seed", sa.seed, "first seed of the coordinate changes");
  selftest_cmd->add_option("--seeds", sa.seeds, "number of coordinate changes per type")->check(CLI::Range(1, 100));
  selftest_cmd->add_option("-j,--jobs", sa.jobs, "worker threads");
  selftest_cmd->add_flag("--inject-failure", sa.inject, "corrupt one expectation (tests the harness)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }
  if (*classify_cmd) return cmd_classify(ca);
  if (*tables_cmd) return cmd_tables(ta);
  return cmd_selftest(sa);
}
