#include "reflwb/quadmap.hpp"

#include <stdexcept>

namespace reflwb {

std::size_t QuadForm::slot(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j)
    std::swap(i, j);
  // rows 0..i-1 contribute n, n-1, ..., n-i+1 slots
  return i * n - i * (i - 1) / 2 + (j - i);
}

QuadForm QuadForm::square(const Vector &alpha) {
  const std::size_t n = alpha.size();
  QuadForm q{n, std::vector<CycNum>(ambient_dim(n))};
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i].is_zero())
      continue;
    q.coeffs[slot(n, i, i)] += alpha[i] * alpha[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (!alpha[j].is_zero())
        q.coeffs[slot(n, i, j)] += CycNum(2) * alpha[i] * alpha[j];
  }
  return q;
}

Matrix QuadForm::gram() const {
  Matrix s(dim, dim);
  const CycNum half(Rational(1, 2));
  for (std::size_t i = 0; i < dim; ++i) {
    s(i, i) = coeffs[slot(dim, i, i)];
    for (std::size_t j = i + 1; j < dim; ++j) {
      s(i, j) = coeffs[slot(dim, i, j)] * half;
      s(j, i) = s(i, j);
    }
  }
  return s;
}

QuadForm QuadForm::from_gram(const Matrix &s) {
  const std::size_t n = s.rows();
  QuadForm q{n, std::vector<CycNum>(ambient_dim(n))};
  for (std::size_t i = 0; i < n; ++i) {
    q.coeffs[slot(n, i, i)] = s(i, i);
    for (std::size_t j = i + 1; j < n; ++j)
      q.coeffs[slot(n, i, j)] = s(i, j) + s(j, i);
  }
  return q;
}

QuadForm QuadForm::transformed(const Matrix &w_inverse) const {
  return from_gram(w_inverse.transpose() * gram() * w_inverse);
}

bool QuadForm::is_zero() const {
  for (const auto &c : coeffs)
    if (!c.is_zero())
      return false;
  return true;
}

PhiMap build_phi(std::size_t dim, std::vector<Vector> forms) {
  PhiMap p{dim, std::move(forms), Matrix(QuadForm::ambient_dim(dim), 0)};
  p.matrix = Matrix(QuadForm::ambient_dim(dim), p.forms.size());
  for (std::size_t h = 0; h < p.forms.size(); ++h) {
    if (p.forms[h].size() != dim)
      throw std::invalid_argument("linear form has the wrong length");
    const QuadForm q = QuadForm::square(p.forms[h]);
    for (std::size_t k = 0; k < q.coeffs.size(); ++k)
      p.matrix(k, h) = q.coeffs[k];
  }
  return p;
}

PhiMap build_phi(const Arrangement &a) { return build_phi(a.dim(), a.forms()); }

PhiMap build_phi(const LinearArrangement &a) { return build_phi(a.dim, a.forms); }

Surjectivity is_surjective(const PhiMap &p) {
  Surjectivity s;
  s.target_dim = QuadForm::ambient_dim(p.dim);
  s.rank = p.forms.empty() ? 0 : rank(p.matrix);
  s.surjective = s.rank == s.target_dim;
  return s;
}

EquivarianceReport equivariance_defect(const PhiMap &p, const GroupModel &g) {
  EquivarianceReport report;
  std::vector<QuadForm> squares;
  for (const auto &f : p.forms)
    squares.push_back(QuadForm::square(f));
  for (std::size_t w = 0; w < g.order(); ++w) {
    const Matrix &w_inv = g.element(g.inverse_index(w));
    for (std::size_t h = 0; h < p.forms.size(); ++h) {
      const Vector moved = p.forms[h] * w_inv;
      std::size_t target = p.forms.size();
      for (std::size_t k = 0; k < p.forms.size(); ++k)
        if (proportional(moved, p.forms[k])) {
          target = k;
          break;
        }
      if (target == p.forms.size())
        throw std::invalid_argument("the group does not permute the hyperplanes of this map");
      if (QuadForm::square(moved) != squares[target])
        report.violations.emplace_back(w, h);
    }
  }
  QuadForm sum{p.dim, std::vector<CycNum>(QuadForm::ambient_dim(p.dim))};
  for (const auto &q : squares)
    for (std::size_t k = 0; k < q.coeffs.size(); ++k)
      sum.coeffs[k] += q.coeffs[k];
  report.sum_of_squares_zero = sum.is_zero();
  if (report.violations.empty() && !report.sum_of_squares_zero) {
    report.sum_of_squares_invariant = true;
    for (const auto &gen : g.generators())
      if (sum.transformed(inverse(gen)) != sum)
        report.sum_of_squares_invariant = false;
  }
  return report;
}

Vector form_of_root(const Matrix &form, const Vector &root) { return conj(root) * form; }

std::vector<Vector> coxeter_equivariant_forms(const CatalogGroup &cg) {
  if (!cg.coxeter)
    throw std::invalid_argument(cg.name + " is not a catalog Coxeter group");
  if (cg.coxeter->type == CoxeterType::I2) {
    const int m = cg.coxeter->n;
    if (m != 3 && m != 4 && m != 6)
      throw std::invalid_argument(coxeter_name(*cg.coxeter) +
                                  " is outside the supported I2(m) models (m in {3, 4, 6})");
  }
  std::vector<Vector> forms;
  for (const auto &root : cg.positive_roots)
    forms.push_back(form_of_root(cg.arrangement.form(), root));
  return forms;
}

bool G12ModelCheck::all() const {
  return roots_match && signed_action && monomial && equivariant && sum_of_squares_zero && form_proportional;
}

G12ModelCheck g12_model_check() {
  const CatalogGroup cg = build(exceptional(12));
  const auto roots = g12_reference_roots();
  const Matrix reference = g12_reference_form();
  const auto gens = g12_generators();
  G12ModelCheck out;

  out.roots_match = roots.size() == cg.arrangement.size();
  std::vector<bool> hit(cg.arrangement.size(), false);
  for (const auto &v : roots) {
    auto h = cg.arrangement.find_by_root(v);
    if (!h || hit[*h]) {
      out.roots_match = false;
      break;
    }
    hit[*h] = true;
  }

  out.signed_action = true;
  out.monomial = true;
  for (const auto &w : gens) {
    Matrix m(roots.size(), roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Vector image = w * roots[k];
      bool found = false;
      for (std::size_t j = 0; j < roots.size() && !found; ++j) {
        auto c = proportionality_factor(image, roots[j]);
        if (!c)
          continue;
        found = true;
        if (*c != CycNum(1) && *c != CycNum(-1))
          out.signed_action = false;
        m(j, k) = *c;
      }
      if (!found)
        out.signed_action = false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::size_t row_nonzero = 0, col_nonzero = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_zero()) {
          ++row_nonzero;
          if (m(i, j) != CycNum(1) && m(i, j) != CycNum(-1))
            out.monomial = false;
        }
        if (!m(j, i).is_zero())
          ++col_nonzero;
      }
      if (row_nonzero != 1 || col_nonzero != 1)
        out.monomial = false;
    }
  }

  std::vector<Vector> forms;
  for (const auto &v : roots)
    forms.push_back(form_of_root(reference, v));
  const EquivarianceReport eq = equivariance_defect(build_phi(2, forms), cg.group);
  out.equivariant = eq.violations.empty();
  out.sum_of_squares_zero = eq.sum_of_squares_zero;

  const Matrix &form = cg.arrangement.form();
  out.form_proportional = !form(0, 0).is_zero() && form == reference.scaled(form(0, 0) / reference(0, 0));

  for (const auto &label : g12_reference_labels()) {
    Matrix s = Matrix::identity(2);
    for (char letter : label)
      s = s * gens.at(static_cast<std::size_t>(letter - 'a'));
    const std::size_t k = out.label_fixed.size();
    out.label_fixed.push_back(s * roots[k] == roots[k]);
  }
  return out;
}

} // namespace reflwb
