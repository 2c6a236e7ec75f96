#include "reflwb/repfamily.hpp"

#include <numeric>
#include <stdexcept>

#include "reflwb/kappa.hpp"

namespace reflwb {

ClassFunction::ClassFunction(const GroupModel &g, std::vector<CycNum> values)
    : group_(&g), values_(std::move(values)) {
  if (values_.size() != g.classes().size())
    throw std::invalid_argument("class function needs one value per conjugacy class");
}

void ClassFunction::check_same_group(const ClassFunction &rhs) const {
  if (group_ != rhs.group_)
    throw std::invalid_argument("class functions belong to different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction &rhs) const {
  check_same_group(rhs);
  auto v = values_;
  for (std::size_t c = 0; c < v.size(); ++c)
    v[c] += rhs.values_[c];
  return {*group_, std::move(v)};
}

ClassFunction ClassFunction::operator-(const ClassFunction &rhs) const {
  check_same_group(rhs);
  auto v = values_;
  for (std::size_t c = 0; c < v.size(); ++c)
    v[c] -= rhs.values_[c];
  return {*group_, std::move(v)};
}

ClassFunction ClassFunction::operator*(const ClassFunction &rhs) const {
  check_same_group(rhs);
  auto v = values_;
  for (std::size_t c = 0; c < v.size(); ++c)
    v[c] *= rhs.values_[c];
  return {*group_, std::move(v)};
}

ClassFunction ClassFunction::galois(long n) const {
  auto v = values_;
  for (auto &x : v)
    x = x.galois(n);
  return {*group_, std::move(v)};
}

bool operator==(const ClassFunction &a, const ClassFunction &b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

ClassFunction trivial_character(const GroupModel &g) {
  return {g, std::vector<CycNum>(g.classes().size(), CycNum(1))};
}

ClassFunction defining_character(const GroupModel &g) {
  std::vector<CycNum> v;
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    v.push_back(g.element(g.class_representative(c)).trace());
  return {g, std::move(v)};
}

ClassFunction linear_character(const GroupModel &g, const std::vector<CycNum> &generator_values) {
  if (generator_values.size() != g.generators().size())
    throw std::invalid_argument("linear character needs one value per generator");
  std::vector<CycNum> per_element(g.order());
  for (std::size_t w = 0; w < g.order(); ++w) {
    CycNum x(1);
    for (auto k : g.word(w))
      x *= generator_values[k];
    per_element[w] = x;
  }
  // Must be constant on classes and multiplicative to be a character.
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (per_element[w] != per_element[g.class_representative(g.class_of(w))])
      throw std::invalid_argument("generator values do not define a class function");
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const std::size_t wk = g.product(w, *g.index_of(g.generators()[k]));
      if (per_element[wk] != per_element[w] * generator_values[k])
        throw std::invalid_argument("generator values do not define a homomorphism");
    }
  }
  std::vector<CycNum> v;
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    v.push_back(per_element[g.class_representative(c)]);
  return {g, std::move(v)};
}

ClassFunction permutation_character(const GroupModel &g, const Arrangement &a,
                                    const std::vector<std::size_t> &subset) {
  std::vector<CycNum> v;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const Matrix &w = g.element(g.class_representative(c));
    long fixed = 0;
    for (auto h : subset)
      if (a.image(w, h) == h)
        ++fixed;
    v.emplace_back(fixed);
  }
  return {g, std::move(v)};
}

CycNum inner_product(const ClassFunction &f, const ClassFunction &h) {
  if (&f.group() != &h.group())
    throw std::invalid_argument("class functions belong to different groups");
  const GroupModel &g = f.group();
  CycNum sum;
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    sum += CycNum(static_cast<long>(g.class_size(c))) * f.at_class(c) * h.at_class(c).conj();
  return sum * CycNum(Rational(1, static_cast<long>(g.order())));
}

CharacterFamily::CharacterFamily(const GroupModel &g, const Arrangement &a)
    : group_(&g), arrangement_(&a), per_class_(g.classes().size()) {
  struct Raw {
    std::size_t hyperplane;
    CycNum value;
    int order;
  };
  std::vector<std::vector<Raw>> raw(g.classes().size());
  long kappa = 1;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const Matrix &w = g.element(g.class_representative(c));
    for (std::size_t h = 0; h < a.size(); ++h) {
      auto zeta = proportionality_factor(w * a[h].root, a[h].root);
      if (!zeta)
        continue;
      auto order = as_root_of_unity(*zeta);
      if (!order)
        throw std::logic_error("eigenvalue on a root is not a root of unity");
      kappa = std::lcm(kappa, static_cast<long>(*order));
      raw[c].push_back({h, *zeta, *order});
    }
  }
  kappa_ = static_cast<int>(kappa);
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (const auto &r : raw[c]) {
      auto k = root_exponent(r.value, r.order);
      if (!k)
        throw std::logic_error("root of unity exponent not found");
      per_class_[c].push_back({r.hyperplane, *k * (kappa_ / r.order)});
    }
}

ClassFunction CharacterFamily::evaluate(long n, const std::vector<bool> *mask) const {
  std::vector<CycNum> v;
  v.reserve(per_class_.size());
  for (const auto &eigs : per_class_) {
    CycNum sum;
    for (const auto &e : eigs)
      if (!mask || (*mask)[e.hyperplane])
        sum += CycNum::zeta(kappa_, static_cast<long>(e.exponent) * (n % kappa_));
    v.push_back(std::move(sum));
  }
  return {*group_, std::move(v)};
}

ClassFunction CharacterFamily::chi(long n) const { return evaluate(n, nullptr); }

ClassFunction CharacterFamily::chi_orbit(long n, std::size_t orbit) const {
  std::vector<bool> mask(arrangement_->size(), false);
  for (auto h : arrangement_->orbits().at(orbit))
    mask[h] = true;
  return evaluate(n, &mask);
}

ClassFunction chi(const GroupModel &g, const Arrangement &a, long n) { return CharacterFamily(g, a).chi(n); }

std::vector<std::size_t> kernel_of_Rn(const GroupModel &g, const Arrangement &a, long n) {
  const ClassFunction x = chi(g, a, n);
  const CycNum &degree = x.at_element(g.identity_index());
  std::vector<std::size_t> kernel;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (x.at_element(w) == degree)
      kernel.push_back(w);
  return kernel;
}

std::vector<std::size_t> central_kernel(const GroupModel &g, long n) {
  std::vector<std::size_t> out;
  for (auto z : g.center()) {
    const long order = static_cast<long>(g.element_order(z));
    if (n % order == 0)
      out.push_back(z);
  }
  return out;
}

int check_periodicity(const GroupModel &g, const Arrangement &a) {
  const CharacterFamily family(g, a);
  const long window = static_cast<long>(g.exponent());
  std::vector<ClassFunction> table;
  for (long n = 0; n < 2 * window; ++n)
    table.push_back(family.chi(n));
  for (long p = 1; p <= window; ++p) {
    bool periodic = true;
    for (long n = 0; n < window && periodic; ++n)
      periodic = table[n + p] == table[n];
    if (periodic)
      return static_cast<int>(p);
  }
  throw std::logic_error("no period found within the group exponent");
}

bool galois_check(const GroupModel &g, const Arrangement &a, long n) {
  const CharacterFamily family(g, a);
  const long k = family.kappa();
  const long r = ((n % k) + k) % k;
  if (std::gcd(r, k) != 1 && k > 1)
    throw std::invalid_argument("n = " + std::to_string(n) + " is not coprime to kappa = " + std::to_string(k));
  return family.chi(n) == family.chi(1).galois(n);
}

Vector generic_vector_in(const Arrangement &a, std::size_t h) {
  const auto basis = null_space(Matrix::from_rows({a[h].alpha}));
  Vector best;
  std::size_t best_count = a.size() + 1;
  for (long seed = 1; seed <= 12 && best_count > 1; ++seed) {
    Vector v(a.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const CycNum c(seed * static_cast<long>(k) * static_cast<long>(k) + static_cast<long>(k) + 1);
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += c * basis[k][i];
    }
    std::size_t count = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (dot(a[k].alpha, v).is_zero())
        ++count;
    if (count < best_count) {
      best = v;
      best_count = count;
    }
  }
  return best;
}

RestrictionResult restriction_check(const GroupModel &g, const Arrangement &a, const Vector &v) {
  RestrictionResult result;
  const GroupModel fixer = parabolic_fixer(g, v);
  result.fixer_order = fixer.order();
  std::vector<std::size_t> outside;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (dot(a[h].alpha, v).is_zero())
      ++result.fixed_hyperplanes;
    else
      outside.push_back(h);
  }
  if (fixer.order() == 1) {
    result.vacuous = true;
    result.notice = "trivial fixer: restriction holds vacuously";
    return result;
  }
  const Arrangement sub = arrangement_of(fixer);
  if (sub.size() != result.fixed_hyperplanes)
    throw std::logic_error("parabolic arrangement differs from the hyperplanes through v");

  const CharacterFamily whole(g, a);
  const CharacterFamily part(fixer, sub);
  const ClassFunction perm = permutation_character(fixer, a, outside);
  std::vector<std::size_t> in_g(fixer.order());
  for (std::size_t u = 0; u < fixer.order(); ++u)
    in_g[u] = *g.index_of(fixer.element(u));
  for (long n = 0; n <= whole.kappa(); ++n) {
    const ClassFunction lhs = whole.chi(n);
    const ClassFunction rhs = part.chi(n) + perm;
    for (std::size_t u = 0; u < fixer.order(); ++u)
      if (lhs.at_element(in_g[u]) != rhs.at_element(u)) {
        result.holds = false;
        result.notice = "mismatch at n = " + std::to_string(n);
        return result;
      }
  }
  return result;
}

namespace {

/// Signed image: w e_H = sign * e_{w(H)}.
std::pair<std::size_t, int> signed_image(const CatalogGroup &cg, const std::vector<Vector> &roots, const Matrix &w,
                                         std::size_t h) {
  const Vector image = w * roots[h];
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (image == roots[k])
      return {k, 1};
    if (image == scaled(roots[k], CycNum(-1)))
      return {k, -1};
  }
  throw std::logic_error(cg.name + ": root image is not a signed root");
}

} // namespace

SignModelRep coxeter_sign_model(const CatalogGroup &cg) {
  if (!cg.coxeter || cg.positive_roots.empty())
    throw std::invalid_argument(cg.name + " is not a catalog Coxeter group");
  SignModelRep rep;
  rep.positive_roots = cg.positive_roots;
  const std::size_t n = rep.positive_roots.size();
  for (const auto &w : cg.group.generators()) {
    Matrix m(n, n);
    for (std::size_t h = 0; h < n; ++h) {
      const auto [k, sign] = signed_image(cg, rep.positive_roots, w, h);
      m(k, h) = sign;
    }
    rep.generator_matrices.push_back(std::move(m));
  }
  return rep;
}

SignModelCheck check_sign_model(const CatalogGroup &cg, const SignModelRep &rep) {
  const GroupModel &g = cg.group;
  SignModelCheck check;
  const std::size_t n = rep.positive_roots.size();
  for (const auto &m : rep.generator_matrices)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const CycNum &x = m(i, j);
        if (x.is_zero())
          continue;
        ++nonzero;
        if (x != CycNum(1) && x != CycNum(-1))
          check.monomial = false;
      }
      if (nonzero != 1)
        check.monomial = false;
    }

  check.element_matrices.resize(g.order());
  check.element_matrices[0] = Matrix::identity(n);
  for (std::size_t w = 1; w < g.order(); ++w) {
    Matrix m = Matrix::identity(n);
    for (auto k : g.word(w))
      m = m * rep.generator_matrices[k];
    check.element_matrices[w] = std::move(m);
  }
  for (std::size_t w = 0; w < g.order() && check.homomorphism; ++w)
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const std::size_t wk = g.product(w, *g.index_of(g.generators()[k]));
      if (check.element_matrices[wk] != check.element_matrices[w] * rep.generator_matrices[k]) {
        check.homomorphism = false;
        break;
      }
    }
  for (std::size_t w = 0; w < g.order() && check.sign_rule; ++w)
    for (std::size_t h = 0; h < n; ++h) {
      const auto [k, sign] = signed_image(cg, rep.positive_roots, g.element(w), h);
      if (check.element_matrices[w](k, h) != CycNum(sign)) {
        check.sign_rule = false;
        break;
      }
    }
  return check;
}

ClassFunction sign_model_character(const CatalogGroup &cg, const SignModelCheck &check) {
  std::vector<CycNum> v;
  for (std::size_t c = 0; c < cg.group.classes().size(); ++c)
    v.push_back(check.element_matrices.at(cg.group.class_representative(c)).trace());
  return {cg.group, std::move(v)};
}

bool G4TableCheck::all() const {
  bool ok = u_norm_one && traces_match;
  for (bool r : rows)
    ok = ok && r;
  return ok;
}

G4TableCheck g4_table_check() {
  const CatalogGroup cg = build(exceptional(4));
  const GroupModel &g = cg.group;
  const CharacterFamily family(g, cg.arrangement);
  const CycNum one(1), j = CycNum::zeta(3), j2 = CycNum::zeta(3, 2);

  auto S = [&](const CycNum &alpha) { return linear_character(g, {alpha, alpha}); };
  const ClassFunction reflection = defining_character(g); // A_{j^2}
  auto A = [&](const CycNum &alpha) { return reflection * S(alpha * j); };
  const ClassFunction trivial = trivial_character(g);
  const ClassFunction U = family.chi(0) - trivial;

  G4TableCheck out;
  out.u_norm_one = inner_product(U, U) == one;
  const std::size_t s_class = g.class_of(*g.index_of(g.generators()[0]));
  out.traces_match = true;
  for (const auto &alpha : {one, j, j2})
    out.traces_match = out.traces_match && A(alpha).at_class(s_class) == -alpha;
  out.traces_match = out.traces_match && A(j2) == reflection;

  out.labels = {"R0 = S1 + U",     "R1 = A1 + A_j2", "R2 = S_j2 + U",
                "R3 = A_j + A_j2", "R4 = S_j + U",   "R5 = A1 + A_j2"};
  const std::array<ClassFunction, 6> expected{S(one) + U,   A(one) + A(j2), S(j2) + U,
                                              A(j) + A(j2), S(j) + U,       A(one) + A(j2)};
  for (std::size_t n = 0; n < 6; ++n)
    out.rows[n] = family.chi(static_cast<long>(n)) == expected[n];
  out.r5_is_a1_plus_aj = family.chi(5) == A(one) + A(j);
  return out;
}

} // namespace reflwb
