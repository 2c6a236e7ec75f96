#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/kappa.hpp"
#include "reflwb/repfamily.hpp"
#include "sweep.hpp"

using namespace reflwb;

namespace {

std::vector<oracle::CVec> numeric_roots(const Arrangement &a) {
  std::vector<oracle::CVec> out;
  for (const auto &h : a.hyperplanes())
    out.push_back(oracle::numeric(h.root));
  return out;
}

std::vector<CatalogGroup> kernel_groups() {
  std::vector<CatalogGroup> out;
  for (const auto &s : {exceptional(4), exceptional(12), imprimitive(3, 1, 2), imprimitive(2, 1, 3)})
    out.push_back(build(s));
  return out;
}

} // namespace

TEST_CASE("chi_n against the numeric eigenvalue sum") {
  for (const auto &entry : sweep::catalog_entries()) {
    CAPTURE(entry.label);
    const CatalogGroup cg = build(entry.spec);
    if (cg.group.order() > 400)
      continue;
    const auto roots = numeric_roots(cg.arrangement);
    const CharacterFamily family(cg.group, cg.arrangement);
    for (long n : {0L, 1L, 2L, 5L, -1L}) {
      const ClassFunction f = family.chi(n);
      for (std::size_t c = 0; c < cg.group.classes().size(); ++c) {
        const auto w = cg.group.class_representative(c);
        CHECK(std::abs(f.at_class(c).embed() - oracle::numeric_chi(cg.group.element(w), roots, n)) < 1e-8);
      }
    }
    CHECK(family.chi(0).at_element(0) == CycNum(static_cast<long>(cg.arrangement.size())));
  }
}

TEST_CASE("chi_n is the sum over orbits") {
  const CatalogGroup cg = build(imprimitive(4, 2, 2));
  const CharacterFamily family(cg.group, cg.arrangement);
  for (long n = 0; n < family.kappa(); ++n) {
    ClassFunction sum(cg.group, std::vector<CycNum>(cg.group.classes().size(), CycNum(0)));
    for (std::size_t o = 0; o < cg.arrangement.orbits().size(); ++o)
      sum = sum + family.chi_orbit(n, o);
    CHECK(sum == family.chi(n));
  }
}

TEST_CASE("class functions: pairing and operations") {
  const CatalogGroup cg = build(exceptional(4));
  const ClassFunction one = trivial_character(cg.group);
  const ClassFunction v = defining_character(cg.group);
  CHECK(inner_product(one, one) == CycNum(1));
  CHECK(inner_product(v, v) == CycNum(1));
  CHECK(inner_product(v, one) == CycNum(0));
  CHECK((v * one) == v);
  CHECK((v - v + one) == one);
  const CatalogGroup other = build(exceptional(12));
  CHECK_THROWS(v + trivial_character(other.group));
  // A linear character that is not class-constant is rejected
  CHECK_THROWS(linear_character(cg.group, {CycNum::zeta(3), CycNum::zeta(3, 2)}));
  const ClassFunction s = linear_character(cg.group, {CycNum::zeta(3), CycNum::zeta(3)});
  CHECK(inner_product(s, s) == CycNum(1));
  std::vector<std::size_t> all(cg.arrangement.size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(permutation_character(cg.group, cg.arrangement, all) == chi(cg.group, cg.arrangement, 0));
}

TEST_CASE("kernels") {
  for (const auto &cg : kernel_groups()) {
    CAPTURE(cg.name);
    const int kappa = CharacterFamily(cg.group, cg.arrangement).kappa();
    for (long n = 0; n <= kappa; ++n) {
      auto k = kernel_of_Rn(cg.group, cg.arrangement, n);
      auto z = central_kernel(cg.group, n);
      std::sort(k.begin(), k.end());
      std::sort(z.begin(), z.end());
      CHECK(k == z);
    }
    auto k0 = kernel_of_Rn(cg.group, cg.arrangement, 0);
    auto center = cg.group.center();
    std::sort(k0.begin(), k0.end());
    std::sort(center.begin(), center.end());
    CHECK(k0 == center);
    CHECK(kernel_of_Rn(cg.group, cg.arrangement, 1) == std::vector<std::size_t>{0});
  }
}

TEST_CASE("period divides kappa and is certified") {
  for (const auto &cg : kernel_groups()) {
    const int kappa = CharacterFamily(cg.group, cg.arrangement).kappa();
    const int p = check_periodicity(cg.group, cg.arrangement);
    CHECK(kappa % p == 0);
    CHECK(chi(cg.group, cg.arrangement, p + 1) == chi(cg.group, cg.arrangement, 1));
  }
  const CatalogGroup g4 = build(exceptional(4));
  CHECK(check_periodicity(g4.group, g4.arrangement) == 6);
}

TEST_CASE("Galois conjugates") {
  for (const auto &cg : kernel_groups()) {
    const int kappa = CharacterFamily(cg.group, cg.arrangement).kappa();
    for (long n = 1; n < kappa; ++n)
      if (std::gcd(n, static_cast<long>(kappa)) == 1)
        CHECK(galois_check(cg.group, cg.arrangement, n));
  }
  const CatalogGroup g4 = build(exceptional(4));
  CHECK_THROWS_AS(galois_check(g4.group, g4.arrangement, 2), std::invalid_argument);
}

TEST_CASE("parabolic restriction") {
  const CatalogGroup a3 = build(coxeter(CoxeterType::A, 3));
  const RestrictionResult ra = restriction_check(a3.group, a3.arrangement, generic_vector_in(a3.arrangement, 0));
  CHECK(ra.holds);
  CHECK(ra.fixer_order == 2);
  CHECK(ra.fixed_hyperplanes == 1);

  const CatalogGroup g4 = build(exceptional(4));
  const RestrictionResult rg = restriction_check(g4.group, g4.arrangement, generic_vector_in(g4.arrangement, 0));
  CHECK(rg.holds);
  CHECK(rg.fixer_order == 3);

  const CatalogGroup b = build(imprimitive(2, 1, 3));
  std::set<std::size_t> fixer_orders;
  for (const auto &orbit : b.arrangement.orbits()) {
    const RestrictionResult r = restriction_check(b.group, b.arrangement, generic_vector_in(b.arrangement, orbit[0]));
    CHECK(r.holds);
    fixer_orders.insert(r.fixer_order);
  }
  CHECK(fixer_orders == std::set<std::size_t>{2});

  // regular vector: vacuous
  const Vector regular{CycNum(1), CycNum(3), CycNum(7)};
  const RestrictionResult rv = restriction_check(b.group, b.arrangement, regular);
  CHECK(rv.vacuous);
  CHECK_FALSE(rv.notice.empty());
}

TEST_CASE("Coxeter sign model") {
  for (const auto &spec : {coxeter(CoxeterType::A, 2), coxeter(CoxeterType::A, 3), coxeter(CoxeterType::B, 2),
                           coxeter(CoxeterType::B, 3), coxeter(CoxeterType::D, 4)}) {
    const CatalogGroup cg = build(spec);
    CAPTURE(cg.name);
    const SignModelRep rep = coxeter_sign_model(cg);
    CHECK(rep.positive_roots.size() == cg.arrangement.size());
    const SignModelCheck check = check_sign_model(cg, rep);
    CHECK(check.monomial);
    CHECK(check.homomorphism);
    CHECK(check.sign_rule);
    CHECK(sign_model_character(cg, check) == chi(cg.group, cg.arrangement, 1));
    CHECK(chi(cg.group, cg.arrangement, 1) != chi(cg.group, cg.arrangement, 0));
  }
  CHECK_THROWS(coxeter_sign_model(build(exceptional(4))));
}

TEST_CASE("G4 decomposition") {
  const G4TableCheck t = g4_table_check();
  CHECK(t.u_norm_one);
  CHECK(t.traces_match);
  for (int k : {0, 1, 2, 3, 4})
    CHECK(t.rows[k]);
  CHECK(t.r5_is_a1_plus_aj);
}
