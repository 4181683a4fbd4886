#pragma once

#include <string>
#include <vector>

namespace icis {

enum class Family { I, T, Jprime, Kprime, Kb, L, Lb, M };

const char* to_string(Family f);

/// A unimodular ICIS class, named by family and index tuple:
///   I:  (1,0) (1,0,1) (1,i)
///   T:  (p,q,r,s), canonical order: indices above 2 ascending, then the 2s
///   J': (mu) (mu,j) for the exceptional rows, (m+1,i) for the series
///   K', L, M:  (mu) (mu,j) (1,0) (1,0,1) (1,i);  K^b, L^b: (1,i)
struct SingularityType {
  Family family = Family::I;
  std::vector<int> indices;

  /// Rows whose normal form carries the modulus lambda.
  bool has_modulus() const;
  /// Subscripted name, e.g. "J'_{3,0}", "K^b_{1,3}", "T_{3,4,5,2}".
  std::string name() const;

  friend bool operator==(const SingularityType&, const SingularityType&) = default;
  friend auto operator<=>(const SingularityType&, const SingularityType&) = default;
};

/// T with its indices put in canonical order.
SingularityType make_T(int p, int q, int r, int s);

/// Inverse of SingularityType::name (also accepts "Kb_{1,2}", "Lb_{1,2}" and
/// the prime written as ′).  Throws InvalidInput.
SingularityType parse_singularity_type(const std::string& text);

}  // namespace icis
