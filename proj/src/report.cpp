#include "icis/report.hpp"

#include <sstream>

#include "icis/errors.hpp"

namespace icis {

namespace {

std::string type_list(const std::vector<GermType>& B) {
  if (B.empty()) return "1";
  std::string s;
  for (const auto& t : B) s += (s.empty() ? "" : ",") + t.to_string();
  return s;
}

}  // namespace

std::string format_text(const ClassificationResult& r) {
  std::ostringstream out;
  out << r.name() << "  mu=" << r.invariants.mu << " tau=" << r.invariants.tau << "\n";
  out << "2-jet: " << to_string(r.twojet.cls) << "  s=" << r.twojet.s << " t=" << r.twojet.t << "\n";
  if (r.twojet.cls != TwoJetClass::None) out << "B: " << type_list(r.blowup.types) << "\n";
  for (const auto& d : r.diagnostics) out << "note: " << d << "\n";
  return out.str();
}

nlohmann::json to_json(const SingularityType& t) {
  return {{"name", t.name()}, {"family", to_string(t.family)}, {"indices", t.indices}, {"has_modulus", t.has_modulus()}};
}

nlohmann::json to_json(const GermType& t) {
  nlohmann::json j = {{"name", t.to_string()}, {"milnor", t.milnor()}};
  return j;
}

nlohmann::json to_json(const ClassificationResult& r) {
  nlohmann::json j;
  j["unimodular"] = r.unimodular();
  j["type"] = r.type ? to_json(*r.type) : nlohmann::json(nullptr);
  j["mu"] = r.invariants.mu;
  j["tau"] = r.invariants.tau;

  nlohmann::json tj;
  tj["class"] = to_string(r.twojet.cls);
  tj["s"] = r.twojet.s;
  tj["t"] = r.twojet.t;
  tj["components"] = nlohmann::json::array();
  for (const auto& c : r.twojet.components) {
    std::vector<std::string> gens;
    for (const auto& g : c.Q.generators) gens.push_back(g.to_string());
    tj["components"].push_back({{"generators", gens}, {"d", c.d}, {"h", c.h.to_string()}, {"j", c.j}});
  }
  if (!r.twojet.pairwise_sum_dims.empty()) tj["pairwise_sum_dims"] = r.twojet.pairwise_sum_dims;
  if (r.twojet.containment) tj["containment"] = *r.twojet.containment;
  if (r.twojet.order_two_generator) tj["order_two_generator"] = *r.twojet.order_two_generator;
  if (r.twojet.tangent) tj["tangent"] = *r.twojet.tangent;
  if (!r.twojet.curve_types.empty()) {
    tj["curve_types"] = nlohmann::json::array();
    for (const auto& t : r.twojet.curve_types) tj["curve_types"].push_back(to_json(t));
  }
  j["twojet"] = tj;

  nlohmann::json b = nlohmann::json::array();
  for (const auto& p : r.blowup.points) {
    std::vector<std::string> coords;
    for (const auto& c : p.point) coords.push_back(c.get_str());
    b.push_back({{"chart", std::string(1, variable_name(p.chart))}, {"point", coords}, {"type", to_json(p.type)}});
  }
  j["blowup"] = b;
  j["diagnostics"] = r.diagnostics;
  return j;
}

TableRow table_row(const SingularityType& t, int mu_cap) {
  TableRow row;
  row.type = t;
  try {
    row.expected = table_invariants(t);
    IdealBasis nf = normal_form(t);
    row.f = nf.generators[0];
    row.g = nf.generators[1];
    row.computed = icis_invariants(row.f, row.g, mu_cap);
    row.pass = row.computed == row.expected;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::string format_text(const TableRow& row) {
  std::ostringstream out;
  out << (row.pass ? "PASS " : "FAIL ") << row.type.name() << "  <" << row.f.to_string() << ", " << row.g.to_string()
      << ">  mu=" << row.computed.mu << " tau=" << row.computed.tau << "  table mu=" << row.expected.mu
      << " tau=" << row.expected.tau;
  if (!row.error.empty()) out << "  error: " << row.error;
  return out.str();
}

nlohmann::json to_json(const TableRow& row) {
  nlohmann::json j = {{"type", to_json(row.type)},
                      {"normal_form", {row.f.to_string(), row.g.to_string()}},
                      {"mu", row.computed.mu},
                      {"tau", row.computed.tau},
                      {"table_mu", row.expected.mu},
                      {"table_tau", row.expected.tau},
                      {"pass", row.pass}};
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

}  // namespace icis
