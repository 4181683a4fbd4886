#pragma once

// Two-jet bundles of the ten 2-jet normal forms (modulus 2), computed once with
// the decomposition and cross-checked by hand.  <xy, zw> is four coordinate
// planes; <x(y-z), y(z-x)> is x=y=0, x=z=0, y=z=0 and x=y=z, any two meeting
// along the w-axis; <wz+xy, y^2+xz> is the plane y=z=0 plus a twisted cubic cone.

#include <optional>
#include <string>
#include <vector>

namespace golden {

struct Component {
  int d;
  const char* h;
  int j;
};

struct Bundle {
  const char* f;
  const char* g;
  const char* cls;
  int s;
  int t;
  std::vector<Component> components;
  std::vector<int> pairwise_sum_dims;
  std::optional<bool> containment;
  std::optional<bool> tangent;
  std::vector<std::string> curve_types;
};

inline const std::vector<Bundle>& two_jets() {
  static const std::vector<Bundle> b = {
      {"x^2+y^2+z^2", "y^2+2*z^2+w^2", "T2222", 1, 1, {{2, "4t", 1}}, {}, {}, {}, {}},
      {"x*y+z^2+w^2", "z*w+y^2", "Tp222", 1, 1, {{2, "4t", 1}}, {}, {}, {}, {"A1"}},
      {"x*y+z^2+w^2", "z*w", "Tpq22", 2, 2, {{2, "1+2t", 1}, {2, "1+2t", 1}}, {}, {}, false, {}},
      {"x*y+w^2", "z*w", "Tpqr2", 3, 3, {{2, "1+t", 1}, {2, "1+t", 1}, {2, "1+2t", 1}}, {}, false, {}, {}},
      {"x*y", "z*w", "Tpqrs", 4, 4, {{2, "1+t", 1}, {2, "1+t", 1}, {2, "1+t", 1}, {2, "1+t", 1}},
       {0, 0, 1, 1, 1, 1}, {}, {}, {}},
      {"x*y-x*z", "y*z-y*x", "I", 4, 4, {{2, "1+t", 1}, {2, "1+t", 1}, {2, "1+t", 1}, {2, "1+t", 1}},
       {1, 1, 1, 1, 1, 1}, {}, {}, {}},
      {"x*y+z^2", "w^2+x*z", "Jprime", 1, 1, {{2, "4t", 1}}, {}, {}, {}, {"A2"}},
      {"x*y+z^2", "w^2+x^2", "Kprime", 1, 1, {{2, "4t", 2}}, {}, {}, true, {}},
      {"w*z+x*y", "y^2+x*z", "L", 2, 2, {{2, "1+t", 1}, {2, "1+3t", 1}}, {}, {}, true, {}},
      {"w*y+x^2-z^2", "w*x", "M", 3, 3, {{2, "1+t", 1}, {2, "1+t", 1}, {2, "1+2t", 1}}, {}, true, {}, {}},
  };
  return b;
}

}  // namespace golden
