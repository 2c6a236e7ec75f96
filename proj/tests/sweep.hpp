#pragma once

#include <string>
#include <vector>

#include "reflwb/catalog.hpp"

namespace sweep {

struct Entry {
  std::string label;
  reflwb::GroupSpec spec;
  bool type_a = false; ///< arrangement of braid type (every rank-1 arrangement counts)
  bool irreducible = true;
};

/// Imprimitive (d, e, r) with de <= 6, r in {1, 2, 3}, minus the trivial G(e, e, 1).
inline std::vector<Entry> imprimitive_entries() {
  std::vector<Entry> out;
  for (int de = 1; de <= 6; ++de)
    for (int e = 1; e <= de; ++e) {
      if (de % e != 0)
        continue;
      const int d = de / e;
      for (int r = 1; r <= 3; ++r) {
        if (d == 1 && r == 1)
          continue;
        const bool type_a = r == 1 || (d == 1 && e == 1) || (d == 1 && e == 3 && r == 2) || (d == 1 && e == 2 && r == 3);
        // G(2,2,2) is A1 x A1
        const bool irreducible = !(d == 1 && e == 2 && r == 2);
        out.push_back({"G(" + std::to_string(de) + "," + std::to_string(e) + "," + std::to_string(r) + ")",
                       reflwb::imprimitive(d, e, r), type_a, irreducible});
      }
    }
  return out;
}

inline std::vector<Entry> catalog_entries() {
  using reflwb::CoxeterType;
  std::vector<Entry> out = imprimitive_entries();
  out.push_back({"G4", reflwb::exceptional(4), false});
  out.push_back({"G12", reflwb::exceptional(12), false});
  for (int n = 1; n <= 4; ++n)
    out.push_back({"A" + std::to_string(n), reflwb::coxeter(CoxeterType::A, n), true});
  for (int n = 2; n <= 4; ++n)
    out.push_back({"B" + std::to_string(n), reflwb::coxeter(CoxeterType::B, n), false});
  out.push_back({"D4", reflwb::coxeter(CoxeterType::D, 4), false});
  for (int m : {3, 4, 6})
    out.push_back({"I2(" + std::to_string(m) + ")", reflwb::coxeter(CoxeterType::I2, m), m == 3});
  return out;
}

/// Reducible test cases.
inline std::vector<Entry> reducible_entries() {
  using reflwb::CoxeterType;
  return {
      {"G(2,2,2)", reflwb::imprimitive(1, 2, 2), false, false},
      {"A1xA1", reflwb::product_of({reflwb::imprimitive(2, 1, 1), reflwb::imprimitive(2, 1, 1)}), false, false},
      {"A2xA1", reflwb::product_of({reflwb::coxeter(CoxeterType::A, 2), reflwb::coxeter(CoxeterType::A, 1)}), false, false},
      {"G4xG(3,1,1)", reflwb::product_of({reflwb::exceptional(4), reflwb::imprimitive(3, 1, 1)}), false, false},
      {"B2xA1", reflwb::product_of({reflwb::coxeter(CoxeterType::B, 2), reflwb::imprimitive(2, 1, 1)}), false, false},
  };
}

} // namespace sweep
