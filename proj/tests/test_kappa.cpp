#include <doctest.h>

#include "oracles.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/kappa.hpp"
#include "sweep.hpp"

using namespace reflwb;

TEST_CASE("kappa and A-indices against numeric eigenvalues") {
  for (const auto &entry : sweep::catalog_entries()) {
    CAPTURE(entry.label);
    const CatalogGroup cg = build(entry.spec);
    const AIndexReport r = a_indices(cg.group, cg.arrangement);
    std::set<int> indices;
    std::vector<oracle::CVec> roots;
    for (const auto &h : cg.arrangement.hyperplanes())
      roots.push_back(oracle::numeric(h.root));
    CHECK(r.kappa == oracle::numeric_kappa(cg.group, roots, &indices));
    CHECK(r.indices == indices);
    for (const auto &[k, wit] : r.witnesses) {
      const oracle::CVec e = roots.at(wit.second);
      const oracle::CVec we = oracle::numeric(cg.group.element(wit.first)) * e;
      CHECK(oracle::root_order(e.dot(we) / e.squaredNorm()) == k);
    }
  }
}

TEST_CASE("G4 and G12 reference values") {
  CHECK(a_indices(build(exceptional(4)).group, build(exceptional(4)).arrangement).kappa == 6);
  const CatalogGroup g12 = build(exceptional(12));
  CHECK(a_indices(g12.group, g12.arrangement).kappa == 2);
  CHECK(reference_kappa_table().size() == 34);
  CHECK(reference_kappa_table().at(4) == 6);
  CHECK(reference_kappa_table().at(12) == 2);
}

TEST_CASE("kappa formula") {
  CHECK(kappa_formula(2, 1, 3) == 2);
  CHECK(kappa_formula(1, 4, 2) == 2);
  CHECK(kappa_formula(1, 3, 3) == 3);
  CHECK(kappa_formula(3, 1, 2) == 3);
  CHECK(kappa_formula(6, 1, 1) == 6);
  CHECK_THROWS(kappa_formula(1, 1, 3));
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::set<int>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::set<int>{1});
}
