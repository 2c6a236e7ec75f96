#include "reflwb/matgroup.hpp"

#include <deque>
#include <numeric>
#include <string>

namespace reflwb {

namespace {

void trim(std::vector<CycNum> &p) {
  while (!p.empty() && p.back().is_zero())
    p.pop_back();
}

std::vector<CycNum> poly_remainder(std::vector<CycNum> a, const std::vector<CycNum> &b) {
  const CycNum lead_inv = b.back().inverse();
  trim(a);
  while (a.size() >= b.size()) {
    const CycNum f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int entry_order_lcm(const Matrix &m) {
  long order = 1;
  for (const auto &x : m.data())
    if (!x.is_rational())
      order = lcm_of(order, x.order());
  return static_cast<int>(order);
}

} // namespace

std::vector<CycNum> poly_derivative(const std::vector<CycNum> &p) {
  std::vector<CycNum> d;
  for (std::size_t k = 1; k < p.size(); ++k)
    d.push_back(p[k] * CycNum(static_cast<long>(k)));
  trim(d);
  return d;
}

std::vector<CycNum> poly_gcd(std::vector<CycNum> a, std::vector<CycNum> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty())
    return a;
  const CycNum inv = a.back().inverse();
  for (auto &c : a)
    c *= inv;
  return a;
}

GroupModel GroupModel::generate(std::vector<Matrix> generators, std::size_t order_bound,
                                std::optional<std::size_t> dim) {
  if (generators.empty() && !dim)
    throw std::invalid_argument("an empty generator list needs an explicit dimension");
  GroupModel g;
  g.dim_ = dim ? *dim : generators.front().rows();
  long order = 1;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Matrix &m = generators[k];
    if (!m.is_square() || m.rows() != g.dim_)
      throw std::invalid_argument("generator " + std::to_string(k) + " is not a " + std::to_string(g.dim_) +
                                  "x" + std::to_string(g.dim_) + " matrix");
    if (determinant(m).is_zero())
      throw std::invalid_argument("generator " + std::to_string(k) + " is not invertible");
    order = lcm_of(order, entry_order_lcm(m));
  }
  g.field_order_ = static_cast<int>(order);
  for (auto &m : generators)
    m = m.lifted(g.field_order_);
  g.generators_ = std::move(generators);

  const Matrix id = Matrix::identity(g.dim_);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  g.parent_.push_back(0);
  g.parent_generator_.push_back(0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t k = 0; k < g.generators_.size(); ++k) {
      Matrix next = g.elements_[head] * g.generators_[k];
      if (g.index_.count(next))
        continue;
      if (g.elements_.size() >= order_bound)
        throw NotFiniteError("group is not finite within the order bound " + std::to_string(order_bound));
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
      g.parent_.push_back(head);
      g.parent_generator_.push_back(k);
    }
  }
  g.compute_inverses_and_orders();
  g.compute_classes();
  g.compute_center();
  return g;
}

std::optional<std::size_t> GroupModel::index_of(const Matrix &m) const {
  auto it = index_.find(m);
  if (it != index_.end())
    return it->second;
  // Entries stored at a different order still compare equal; retry lifted.
  if (m.rows() == dim_) {
    long order = entry_order_lcm(m);
    if (field_order_ % order == 0) {
      auto lifted = index_.find(m.lifted(field_order_));
      if (lifted != index_.end())
        return lifted->second;
    }
  }
  return std::nullopt;
}

std::size_t GroupModel::product(std::size_t i, std::size_t j) const {
  auto k = index_of(elements_.at(i) * elements_.at(j));
  if (!k)
    throw std::logic_error("product left the group");
  return *k;
}

std::vector<std::size_t> GroupModel::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(parent_generator_[i]);
    i = parent_[i];
  }
  return {w.rbegin(), w.rend()};
}

std::size_t GroupModel::exponent() const {
  std::size_t e = 1;
  for (auto o : element_orders_)
    e = std::lcm(e, o);
  return e;
}

bool GroupModel::is_central(std::size_t i) const {
  return std::binary_search(center_.begin(), center_.end(), i);
}

void GroupModel::compute_inverses_and_orders() {
  const std::size_t n = elements_.size();
  inverses_.assign(n, 0);
  element_orders_.assign(n, 1);
  const Matrix id = Matrix::identity(dim_);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix prev = id;
    Matrix power = elements_[i];
    std::size_t k = 1;
    while (power != id) {
      prev = power;
      power = power * elements_[i];
      ++k;
      if (k > n)
        throw std::logic_error("element order exceeds the group order");
    }
    element_orders_[i] = k;
    inverses_[i] = *index_of(prev);
  }
}

void GroupModel::compute_classes() {
  const std::size_t n = elements_.size();
  class_of_.assign(n, n);
  std::vector<std::size_t> gen_index;
  for (const auto &gen : generators_)
    gen_index.push_back(*index_of(gen));
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] != n)
      continue;
    const std::size_t c = classes_.size();
    classes_.emplace_back();
    std::deque<std::size_t> queue{start};
    class_of_[start] = c;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      classes_[c].push_back(x);
      for (auto gi : gen_index) {
        const std::size_t y = product(product(gi, x), inverses_[gi]);
        if (class_of_[y] == n) {
          class_of_[y] = c;
          queue.push_back(y);
        }
      }
    }
    std::sort(classes_[c].begin(), classes_[c].end());
  }
}

void GroupModel::compute_center() {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    bool commutes = true;
    for (const auto &gen : generators_)
      if (elements_[i] * gen != gen * elements_[i]) {
        commutes = false;
        break;
      }
    if (commutes)
      center_.push_back(i);
  }
}

bool is_reflection(const Matrix &m) {
  if (!m.is_square())
    return false;
  return rank(m - Matrix::identity(m.rows())) == 1;
}

Vector reflection_form(const Matrix &reflection) {
  const Matrix diff = reflection - Matrix::identity(reflection.rows());
  for (std::size_t i = 0; i < diff.rows(); ++i) {
    Vector r = diff.row(i);
    if (!is_zero(r))
      return normalize_first_nonzero(r);
  }
  throw std::invalid_argument("identity has no reflecting hyperplane");
}

std::vector<Reflection> reflections(const GroupModel &g) {
  std::vector<Reflection> out;
  std::vector<Vector> forms;
  std::vector<std::size_t> counts;
  for (std::size_t i = 1; i < g.order(); ++i) {
    const Matrix &m = g.element(i);
    if (!is_reflection(m))
      continue;
    const Vector alpha = reflection_form(m);
    std::size_t h = 0;
    while (h < forms.size() && forms[h] != alpha)
      ++h;
    if (h == forms.size()) {
      forms.push_back(alpha);
      counts.push_back(0);
    }
    ++counts[h];
    out.push_back({i, h, determinant(m), false});
  }
  for (auto &r : out) {
    const int d = static_cast<int>(counts[r.hyperplane]) + 1;
    r.distinguished = r.eigenvalue == CycNum::zeta(d);
  }
  return out;
}

Matrix invariant_hermitian_form(const GroupModel &g) {
  Matrix form(g.dim(), g.dim());
  for (const auto &w : g.elements())
    form = form + w.conj_transpose() * w;
  return form;
}

bool is_positive_definite(const Matrix &hermitian_form) {
  const std::size_t n = hermitian_form.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        minor(i, j) = hermitian_form(i, j);
    const CycNum det = determinant(minor);
    if (!det.is_rational())
      throw std::domain_error("leading minor " + std::to_string(k) + " = " + det.to_string() +
                              " is not rational; its sign cannot be certified exactly");
    if (sgn(det.rational_part()) <= 0)
      return false;
  }
  return true;
}

GroupModel parabolic_fixer(const GroupModel &g, const Vector &v) {
  if (v.size() != g.dim())
    throw std::invalid_argument("vector dimension does not match the group");
  if (is_zero(v))
    throw std::invalid_argument("parabolic fixer of the zero vector");
  std::size_t direct = 0;
  for (const auto &w : g.elements())
    if (w * v == v)
      ++direct;
  std::vector<Matrix> gens;
  for (const auto &r : reflections(g)) {
    const Matrix &m = g.element(r.element);
    if (m * v == v)
      gens.push_back(m);
  }
  GroupModel fixer = GroupModel::generate(std::move(gens), g.order() + 1, g.dim());
  if (fixer.order() != direct)
    throw std::logic_error("reflections fixing v do not generate its fixer");
  return fixer;
}

std::size_t conjugacy_class_of(const GroupModel &g, std::size_t element) { return g.class_of(element); }

std::vector<CycNum> minimal_polynomial(const Matrix &m) {
  const std::size_t n = m.rows();
  std::vector<Vector> powers;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector flat(p.data().begin(), p.data().end());
    if (!powers.empty()) {
      if (auto c = solve(Matrix::from_columns(powers), flat)) {
        std::vector<CycNum> poly(k + 1);
        for (std::size_t i = 0; i < k; ++i)
          poly[i] = -(*c)[i];
        poly[k] = 1;
        return poly;
      }
    }
    powers.push_back(std::move(flat));
    p = p * m;
  }
  throw std::logic_error("minimal polynomial degree exceeds the dimension");
}

bool is_semisimple(const Matrix &m) {
  const auto mp = minimal_polynomial(m);
  return poly_gcd(mp, poly_derivative(mp)).size() == 1;
}

} // namespace reflwb
