#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "reflwb/arrangement.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/matgroup.hpp"

namespace reflwb {

/// Element of S^2 V^* in the monomial basis x_i x_j (i <= j), ordered
/// lexicographically: x1^2, x1x2, ..., x1xn, x2^2, ..., xn^2.
struct QuadForm {
  std::size_t dim = 0;
  std::vector<CycNum> coeffs;

  static std::size_t ambient_dim(std::size_t n) { return n * (n + 1) / 2; }
  static std::size_t slot(std::size_t n, std::size_t i, std::size_t j);

  /// Square of a linear form.
  static QuadForm square(const Vector &alpha);
  /// Symmetric Gram matrix S with q(x) = x^T S x.
  Matrix gram() const;
  static QuadForm from_gram(const Matrix &s);
  /// (w.q)(x) = q(w^{-1} x), given w^{-1}.
  QuadForm transformed(const Matrix &w_inverse) const;
  bool is_zero() const;

  friend bool operator==(const QuadForm &a, const QuadForm &b) { return a.dim == b.dim && a.coeffs == b.coeffs; }
};

/// Phi: C^A -> S^2 V^*, v_H -> alpha_H^2; column H holds the coefficients of alpha_H^2.
struct PhiMap {
  std::size_t dim = 0;
  std::vector<Vector> forms;
  Matrix matrix;
};

PhiMap build_phi(std::size_t dim, std::vector<Vector> forms);
PhiMap build_phi(const Arrangement &a);
PhiMap build_phi(const LinearArrangement &a);

struct Surjectivity {
  std::size_t rank = 0;
  std::size_t target_dim = 0;
  bool surjective = false;
};

Surjectivity is_surjective(const PhiMap &p);

struct EquivarianceReport {
  /// (element index, hyperplane index) with (w.alpha_H)^2 != alpha_{w(H)}^2
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  bool sum_of_squares_zero = false;
  /// Only meaningful when violations is empty and the sum is nonzero.
  bool sum_of_squares_invariant = false;
};

EquivarianceReport equivariance_defect(const PhiMap &p, const GroupModel &g);

/// alpha_H = F(e_H, .) built from the signed root system of a Coxeter model.
/// Accepts types A, B, D and I2(m) for m in {3, 4, 6}.
std::vector<Vector> coxeter_equivariant_forms(const CatalogGroup &cg);

/// alpha(x) = F(e, x) as a row vector: conj(e)^T F.
Vector form_of_root(const Matrix &form, const Vector &root);

/// The listed G12 vectors against the built model.
struct G12ModelCheck {
  bool roots_match = false;       ///< as a set, proportional to the arrangement's roots
  bool signed_action = false;     ///< w e_H = +-e_{w(H)} for every generator
  bool monomial = false;          ///< the induced 12x12 matrices have entries in {0, +-1}
  bool equivariant = false;       ///< no equivariance defect with alpha_H = (e_H | .)
  bool sum_of_squares_zero = false;
  bool form_proportional = false; ///< invariant form is a scalar multiple of the listed one
  /// reference vector k is an eigenvector of the reflection labelled k with eigenvalue 1
  std::vector<bool> label_fixed;
  bool all() const;
};

G12ModelCheck g12_model_check();

} // namespace reflwb
