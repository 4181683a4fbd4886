#pragma once

#include <string>

#include <json.hpp>

#include "icis/catalogue.hpp"
#include "icis/classifier.hpp"

namespace icis {

/// "K'_{10,1}  mu=10 tau=9" followed by the 2-jet class, B and diagnostics.
std::string format_text(const ClassificationResult& r);
nlohmann::json to_json(const ClassificationResult& r);
nlohmann::json to_json(const SingularityType& t);
nlohmann::json to_json(const GermType& t);

/// One line of the regenerated tables: normal form, computed and tabulated invariants.
struct TableRow {
  SingularityType type;
  Polynomial f, g;
  InvariantRecord expected;
  InvariantRecord computed;
  bool pass = false;
  /// Set when the normal form or the invariants could not be computed.
  std::string error;
};

TableRow table_row(const SingularityType& t, int mu_cap = kDefaultMuCap);
std::string format_text(const TableRow& row);
nlohmann::json to_json(const TableRow& row);

}  // namespace icis
