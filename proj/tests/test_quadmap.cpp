#include <doctest.h>

#include "oracles.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/io.hpp"
#include "reflwb/quadmap.hpp"
#include "sweep.hpp"

using namespace reflwb;

TEST_CASE("quadratic form basics") {
  CHECK(QuadForm::ambient_dim(3) == 6);
  CHECK(QuadForm::slot(3, 0, 0) == 0);
  CHECK(QuadForm::slot(3, 1, 1) == 3);
  CHECK(QuadForm::slot(3, 2, 1) == 4);
  const Vector a{CycNum(1), CycNum(-1)};
  const QuadForm q = QuadForm::square(a);
  CHECK(q.coeffs == Vector{CycNum(1), CycNum(-2), CycNum(1)});
  CHECK(QuadForm::from_gram(q.gram()) == q);
  // (w.q)(x) = q(w^-1 x): swapping coordinates fixes (x - y)^2
  Matrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = CycNum(1);
  CHECK(q.transformed(swap) == q);
}

TEST_CASE("Phi rank against a numeric SVD") {
  for (const auto &entry : sweep::catalog_entries()) {
    CAPTURE(entry.label);
    const CatalogGroup cg = build(entry.spec);
    const Surjectivity s = is_surjective(build_phi(cg.arrangement));
    CHECK(s.rank == oracle::numeric_phi_rank(cg.arrangement.forms(), cg.arrangement.dim()));
    CHECK(s.target_dim == QuadForm::ambient_dim(cg.arrangement.dim()));
  }
}

TEST_CASE("Phi on the xyz(x-y)(y-z) arrangement has rank 5 of 6") {
  const LinearArrangement a = parse_arrangement(nlohmann::json::parse("[[1,0,0],[0,1,0],[0,0,1],[1,-1,0],[0,1,-1]]"));
  const Surjectivity s = is_surjective(build_phi(a));
  CHECK(s.rank == 5);
  CHECK(s.target_dim == 6);
  CHECK_FALSE(s.surjective);
}

TEST_CASE("Coxeter equivariant forms") {
  for (const auto &spec : {coxeter(CoxeterType::A, 3), coxeter(CoxeterType::B, 3), coxeter(CoxeterType::D, 4),
                           coxeter(CoxeterType::I2, 6)}) {
    const CatalogGroup cg = build(spec);
    const auto forms = coxeter_equivariant_forms(cg);
    const EquivarianceReport r = equivariance_defect(build_phi(cg.arrangement.dim(), forms), cg.group);
    CHECK(r.violations.empty());
    CHECK(r.sum_of_squares_invariant);
  }
  CHECK_THROWS(coxeter_equivariant_forms(build(exceptional(4))));
}

TEST_CASE("G12 reference model") {
  const G12ModelCheck c = g12_model_check();
  CHECK(c.roots_match);
  CHECK(c.signed_action);
  CHECK(c.monomial);
  CHECK(c.equivariant);
  CHECK(c.sum_of_squares_zero);
  CHECK(c.form_proportional);
  CHECK(c.all());
  CHECK(g12_reference_roots().size() == 12);
  CHECK(g12_reference_labels().size() == 12);
  CHECK(sqrt_minus_two() * sqrt_minus_two() == CycNum(-2));
}
