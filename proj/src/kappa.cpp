#include "reflwb/kappa.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace reflwb {

AIndexReport a_indices(const GroupModel &g, const Arrangement &a) {
  AIndexReport report;
  for (std::size_t w = 0; w < g.order(); ++w) {
    const Matrix &m = g.element(w);
    for (std::size_t h = 0; h < a.size(); ++h) {
      const Vector &root = a[h].root;
      auto factor = proportionality_factor(m * root, root);
      if (!factor)
        continue;
      auto order = as_root_of_unity(*factor);
      if (!order)
        throw std::logic_error("eigenvalue on a root is not a root of unity");
      if (report.indices.insert(*order).second)
        report.witnesses[*order] = {w, h};
    }
  }
  report.kappa = 1;
  for (int d : report.indices)
    report.kappa = std::lcm(report.kappa, d);
  return report;
}

int kappa_formula(int d, int e, int r) {
  if (d < 1 || e < 1 || r < 1)
    throw std::invalid_argument("G(de,e,r) parameters must be positive");
  if (d * e < 2)
    throw std::invalid_argument("G(1,1," + std::to_string(r) + ") is excluded (reducible or trivial)");
  if (r == 1)
    return d;
  if (d != 1 || r >= 3)
    return d * e;
  return 2;
}

const std::map<int, int> &reference_kappa_table() {
  static const std::map<int, int> table{
      {4, 6},   {5, 6},   {6, 12},  {7, 12},  {8, 4},   {9, 8},   {10, 12}, {11, 24}, {12, 2},
      {13, 8},  {14, 6},  {15, 24}, {16, 10}, {17, 20}, {18, 30}, {19, 60}, {20, 6},  {21, 12},
      {22, 4},  {23, 2},  {24, 2},  {25, 6},  {26, 6},  {27, 6},  {28, 2},  {29, 4},  {30, 2},
      {31, 4},  {32, 6},  {33, 6},  {34, 6},  {35, 2},  {36, 2},  {37, 2},
  };
  return table;
}

std::set<int> divisors(int n) {
  std::set<int> out;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0)
      out.insert(k);
  return out;
}

} // namespace reflwb
