#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icis/blowup.hpp"
#include "icis/ideal.hpp"
#include "icis/invariants.hpp"
#include "icis/singularity_type.hpp"
#include "icis/twojet.hpp"

namespace icis {

/// Sorted list of blow-up germ types; empty means the strict transform is smooth.
using TypeList = std::vector<GermType>;

// Decision trees per 2-jet class.  nullopt means not unimodular.
std::optional<SingularityType> classify_I(int mu, int tau, const TypeList& B);
std::optional<SingularityType> classify_T(int mu, int tau, TwoJetClass jet, const TypeList& B);
std::optional<SingularityType> classify_Jprime(int mu, int tau, const TypeList& B);
std::optional<SingularityType> classify_Kprime(int mu, int tau, const TypeList& B);
std::optional<SingularityType> classify_L(int mu, int tau, const TypeList& B);
std::optional<SingularityType> classify_M(int mu, int tau, const TypeList& B);

/// Dispatch on the 2-jet class.
std::optional<SingularityType> classify_invariants(TwoJetClass jet, int mu, int tau, const TypeList& B);

struct ClassifyOptions {
  int mu_cap = kDefaultMuCap;
  std::uint64_t seed = 0;
  /// Recompute mu with a second generic combination (a third on disagreement).
  bool verify = false;
};

struct ClassificationResult {
  /// nullopt: not unimodular.
  std::optional<SingularityType> type;
  InvariantRecord invariants;
  TwoJetAnalysis twojet;
  BlowupReport blowup;
  std::vector<std::string> diagnostics;

  bool unimodular() const { return type.has_value(); }
  std::string name() const { return type ? type->name() : "not unimodular"; }
};

/// Full pipeline for I = <f, g> in <x,y,z,w>^2.  Throws NotIsolated,
/// NotCompleteIntersection, Hypersurface and InvalidInput; every other failure
/// along the way ends in a not-unimodular result with a diagnostic.
ClassificationResult classify(const Polynomial& f, const Polynomial& g, const ClassifyOptions& opt = {});
ClassificationResult classify(const IdealBasis& I, const ClassifyOptions& opt = {});

}  // namespace icis
