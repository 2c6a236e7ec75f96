#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/matgroup.hpp"
#include "sweep.hpp"

using namespace reflwb;

TEST_CASE("imprimitive orders match the closed formula and a numeric closure") {
  for (const auto &entry : sweep::imprimitive_entries()) {
    const auto &s = std::get<ImprimitiveSpec>(entry.spec.kind);
    const CatalogGroup cg = build(entry.spec);
    CAPTURE(entry.label);
    CHECK(cg.group.order() == oracle::imprimitive_order(s.d, s.e, s.r));
    if (cg.group.order() <= 500)
      CHECK(cg.group.order() == oracle::closure_order(cg.group.generators()));
  }
}

TEST_CASE("exceptional and Coxeter orders") {
  CHECK(build(exceptional(4)).group.order() == 24);
  CHECK(build(exceptional(12)).group.order() == 48);
  CHECK(oracle::closure_order(g4_generators()) == 24);
  CHECK(oracle::closure_order(g12_generators()) == 48);
  CHECK(build(coxeter(CoxeterType::A, 4)).group.order() == 120);
  CHECK(build(coxeter(CoxeterType::B, 3)).group.order() == 48);
  CHECK(build(coxeter(CoxeterType::D, 4)).group.order() == 192);
  CHECK(build(coxeter(CoxeterType::I2, 6)).group.order() == 12);
}

TEST_CASE("closure refuses infinite or singular generators") {
  Matrix m = Matrix::identity(2);
  m(0, 0) = CycNum(2);
  CHECK_THROWS_AS(GroupModel::generate({m}, 500), NotFiniteError);
  Matrix z(2, 2);
  CHECK_THROWS(GroupModel::generate({z}));
}

TEST_CASE("classes partition the group; center and element orders") {
  const CatalogGroup cg = build(exceptional(4));
  const GroupModel &g = cg.group;
  std::set<std::size_t> seen;
  for (const auto &cls : g.classes())
    for (auto w : cls)
      CHECK(seen.insert(w).second);
  CHECK(seen.size() == g.order());
  CHECK(g.classes().size() == 7);
  CHECK(g.center().size() == 2);
  CHECK(g.exponent() == 12);
  for (std::size_t w = 0; w < g.order(); ++w) {
    Matrix p = Matrix::identity(2);
    for (std::size_t k = 0; k < g.element_order(w); ++k)
      p = p * g.element(w);
    CHECK(p == Matrix::identity(2));
    CHECK(g.product(w, g.inverse_index(w)) == g.identity_index());
    Matrix prod = Matrix::identity(2);
    for (auto k : g.word(w))
      prod = prod * g.generators()[k];
    CHECK(prod == g.element(w));
  }
  CHECK(build(exceptional(12)).group.center().size() == 2);
  CHECK(build(imprimitive(3, 1, 2)).group.center().size() == 3);
}

TEST_CASE("reflections: counts against a numeric search") {
  for (const auto &spec : {exceptional(4), exceptional(12), imprimitive(4, 2, 2), coxeter(CoxeterType::B, 3)}) {
    const CatalogGroup cg = build(spec);
    const auto refl = reflections(cg.group);
    const auto num = oracle::numeric_reflections(cg.group);
    CHECK(refl.size() == std::accumulate(num.reflection_count.begin(), num.reflection_count.end(), std::size_t{0}));
    CHECK(cg.arrangement.size() == num.roots.size());
  }
  CHECK(reflections(build(exceptional(4)).group).size() == 8);
  CHECK(reflections(build(exceptional(12)).group).size() == 12);
}

TEST_CASE("invariant hermitian form") {
  for (const auto &spec : {exceptional(4), exceptional(12), imprimitive(3, 1, 2), coxeter(CoxeterType::D, 4)}) {
    const CatalogGroup cg = build(spec);
    const Matrix f = invariant_hermitian_form(cg.group);
    CHECK(is_positive_definite(f));
    CHECK(f.conj_transpose() == f);
    for (const auto &w : cg.group.generators())
      CHECK(w.conj_transpose() * f * w == f);
  }
}

TEST_CASE("minimal polynomials and semisimplicity") {
  Matrix jordan = Matrix::identity(2);
  jordan(0, 1) = CycNum(1);
  CHECK_FALSE(is_semisimple(jordan));
  CHECK(minimal_polynomial(jordan).size() == 3);
  const Matrix s = g4_generators()[0];
  CHECK(is_semisimple(s));
  CHECK(minimal_polynomial(s).size() == 3);
  CHECK(minimal_polynomial(Matrix::identity(3)).size() == 2);
}

TEST_CASE("parabolic fixers") {
  const CatalogGroup cg = build(coxeter(CoxeterType::A, 3));
  CHECK_THROWS(parabolic_fixer(cg.group, Vector(3, CycNum(0))));
  // a regular vector has trivial fixer
  const Vector regular{CycNum(1), CycNum(2), CycNum(5)};
  CHECK(parabolic_fixer(build(coxeter(CoxeterType::B, 3)).group, regular).order() == 1);
}
