#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "reflwb/arrangement.hpp"
#include "reflwb/matgroup.hpp"

namespace reflwb {

struct AIndexReport {
  std::set<int> indices;
  int kappa = 1;
  /// index -> (element, hyperplane) realizing it
  std::map<int, std::pair<std::size_t, std::size_t>> witnesses;
};

/// Orders of all scalars zeta with w e_H = zeta e_H, over every w and H.
AIndexReport a_indices(const GroupModel &g, const Arrangement &a);

/// kappa(G(de,e,r)) as stated for the imprimitive family: de if d != 1 or r >= 3,
/// 2 for G(e,e,2), and the group order d in rank 1. Rejects de = 1.
int kappa_formula(int d, int e, int r);

/// kappa of the 34 exceptional groups keyed by Shephard-Todd number.
const std::map<int, int> &reference_kappa_table();

std::set<int> divisors(int n);

} // namespace reflwb
