#include "reflwb/catalog.hpp"

#include <deque>
#include <stdexcept>

namespace reflwb {

namespace {

CycNum j3() { return CycNum::zeta(3); }

Matrix block_diagonal(const std::vector<Matrix> &blocks) {
  std::size_t n = 0;
  for (const auto &b : blocks)
    n += b.rows();
  Matrix m(n, n);
  std::size_t offset = 0;
  for (const auto &b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        m(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return m;
}

std::optional<CoxeterSpec> imprimitive_coxeter_type(const ImprimitiveSpec &s, bool essentialized) {
  if (s.d == 1 && s.e == 1 && essentialized && s.r >= 2)
    return CoxeterSpec{CoxeterType::A, s.r - 1};
  if (s.d == 2 && s.e == 1 && s.r >= 2)
    return CoxeterSpec{CoxeterType::B, s.r};
  if (s.d == 1 && s.e == 2 && s.r >= 2)
    return CoxeterSpec{CoxeterType::D, s.r};
  if (s.d == 1 && s.r == 2 && s.e >= 3)
    return CoxeterSpec{CoxeterType::I2, s.e};
  return std::nullopt;
}

ImprimitiveSpec coxeter_model(const CoxeterSpec &c) {
  switch (c.type) {
  case CoxeterType::A:
    if (c.n < 1)
      throw std::invalid_argument("type A needs rank >= 1");
    return {1, 1, c.n + 1, true};
  case CoxeterType::B:
    if (c.n < 2)
      throw std::invalid_argument("type B needs rank >= 2");
    return {2, 1, c.n, std::nullopt};
  case CoxeterType::D:
    if (c.n < 2)
      throw std::invalid_argument("type D needs rank >= 2");
    return {1, 2, c.n, std::nullopt};
  case CoxeterType::I2:
    if (c.n < 3)
      throw std::invalid_argument("type I2(m) needs m >= 3");
    return {1, c.n, 2, std::nullopt};
  }
  throw std::invalid_argument("unknown Coxeter type");
}

struct Built {
  GroupModel group;
  Arrangement arrangement;
};

Built build_imprimitive(const ImprimitiveSpec &s, std::size_t order_bound, bool &essentialized) {
  if (s.d < 1 || s.e < 1 || s.r < 1)
    throw std::invalid_argument("G(de,e,r) parameters must be positive");
  if (s.r == 1 && s.d < 2)
    throw std::invalid_argument("G(" + std::to_string(s.d * s.e) + "," + std::to_string(s.e) +
                                ",1) is trivial");
  const bool plain = s.d == 1 && s.e == 1;
  essentialized = s.essentialize.value_or(plain);
  if (plain && !essentialized && s.r < 3)
    throw std::invalid_argument("G(1,1," + std::to_string(s.r) + ") is rejected without essentialization");
  auto group = GroupModel::generate(imprimitive_generators(s.d, s.e, s.r), order_bound);
  if (essentialized) {
    auto ess = essentialize(group, order_bound);
    return {std::move(ess.group), std::move(ess.arrangement)};
  }
  auto a = arrangement_of(group);
  return {std::move(group), std::move(a)};
}

std::vector<Matrix> spec_generators(const GroupSpec &spec, std::size_t order_bound);

} // namespace

CycNum sqrt_minus_two() { return CycNum::zeta(8, 1) + CycNum::zeta(8, 3); }

std::vector<Matrix> imprimitive_generators(int d, int e, int r) {
  const int m = d * e;
  std::vector<Matrix> gens;
  if (r == 1) {
    Matrix t(1, 1);
    t(0, 0) = CycNum::zeta(m, e);
    gens.push_back(t);
    return gens;
  }
  for (int i = 0; i + 1 < r; ++i) {
    Matrix s = Matrix::identity(r);
    s(i, i) = 0;
    s(i + 1, i + 1) = 0;
    s(i, i + 1) = 1;
    s(i + 1, i) = 1;
    gens.push_back(s);
  }
  if (e > 1) {
    Matrix s = Matrix::identity(r);
    s(0, 0) = 0;
    s(1, 1) = 0;
    s(0, 1) = CycNum::zeta(m, -1);
    s(1, 0) = CycNum::zeta(m, 1);
    gens.push_back(s);
  }
  if (d > 1) {
    Matrix t = Matrix::identity(r);
    t(0, 0) = CycNum::zeta(m, e);
    gens.push_back(t);
  }
  return gens;
}

std::vector<Matrix> g4_generators() {
  const CycNum j = j3();
  Matrix s = Matrix::identity(2);
  s(1, 1) = j;
  const CycNum third = CycNum(Rational(1, 3));
  Matrix t(2, 2);
  t(0, 0) = third * (CycNum(1) + CycNum(2) * j);
  t(0, 1) = third * (j - CycNum(1));
  t(1, 0) = third * (CycNum(2) * j - CycNum(2));
  t(1, 1) = third * (j + CycNum(2));
  return {s, t};
}

std::vector<Matrix> g12_generators() {
  const CycNum r = sqrt_minus_two();
  const CycNum one(1);
  Matrix a(2, 2), b(2, 2), c(2, 2);
  a(0, 0) = one;
  a(0, 1) = one + r;
  a(1, 1) = -one;
  b(0, 0) = -one;
  b(1, 0) = one - r;
  b(1, 1) = one;
  c(0, 0) = r;
  c(0, 1) = -one + r;
  c(1, 0) = -one - r;
  c(1, 1) = -r;
  return {a.lifted(8), b.lifted(8), c.lifted(8)};
}

Matrix g12_reference_form() {
  const CycNum r = sqrt_minus_two();
  Matrix f(2, 2);
  f(0, 0) = 2;
  f(0, 1) = CycNum(1) + r;
  f(1, 0) = CycNum(1) - r;
  f(1, 1) = 2;
  return f;
}

std::vector<Vector> g12_reference_roots() {
  const CycNum r = sqrt_minus_two();
  const CycNum one(1);
  return {
      {one + r, CycNum(-2)}, {one, CycNum(0)},  {CycNum(0), one},
      {CycNum(-2), one - r}, {one, r},          {one, -one},
      {one - r, one + r},    {-one + r, -r},    {-one - r, one},
      {-one, one - r},       {-r, one + r},     {-r, one},
  };
}

std::vector<std::string> g12_reference_labels() {
  return {"babab", "a", "b", "ababa", "bcb", "c", "acaca", "cbc", "aba", "bab", "cac", "aca"};
}

std::string coxeter_name(const CoxeterSpec &c) {
  switch (c.type) {
  case CoxeterType::A:
    return "A" + std::to_string(c.n);
  case CoxeterType::B:
    return "B" + std::to_string(c.n);
  case CoxeterType::D:
    return "D" + std::to_string(c.n);
  case CoxeterType::I2:
    return "I2(" + std::to_string(c.n) + ")";
  }
  return "?";
}

std::string spec_name(const GroupSpec &spec) {
  return std::visit(
      [](const auto &s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ImprimitiveSpec>) {
          return "G(" + std::to_string(s.d * s.e) + "," + std::to_string(s.e) + "," + std::to_string(s.r) + ")";
        } else if constexpr (std::is_same_v<T, CoxeterSpec>) {
          return coxeter_name(s);
        } else if constexpr (std::is_same_v<T, ExceptionalSpec>) {
          return "G" + std::to_string(s.shephard_todd);
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          return "explicit(dim=" + std::to_string(s.dim) + ",order=" + std::to_string(s.cyclotomic_order) + ")";
        } else {
          std::string out;
          for (const auto &f : s.factors)
            out += (out.empty() ? "" : "x") + spec_name(f);
          return out;
        }
      },
      spec.kind);
}

GroupSpec imprimitive(int d, int e, int r) { return {ImprimitiveSpec{d, e, r, std::nullopt}}; }
GroupSpec coxeter(CoxeterType type, int n) { return {CoxeterSpec{type, n}}; }
GroupSpec exceptional(int shephard_todd) { return {ExceptionalSpec{shephard_todd}}; }
GroupSpec product_of(std::vector<GroupSpec> factors) { return {ProductSpec{std::move(factors)}}; }

namespace {

std::vector<Matrix> spec_generators(const GroupSpec &spec, std::size_t order_bound) {
  return build(spec, order_bound).group.generators();
}

} // namespace

std::optional<std::vector<Vector>> signed_roots(const GroupModel &g, const Arrangement &a) {
  auto check = [&](const std::vector<Vector> &roots) {
    for (const auto &w : g.generators())
      for (std::size_t h = 0; h < a.size(); ++h) {
        const std::size_t k = a.image(w, h);
        const Vector image = w * roots[h];
        if (image != roots[k] && image != scaled(roots[k], CycNum(-1)))
          return false;
      }
    return true;
  };
  std::vector<Vector> roots = a.roots();
  if (check(roots))
    return roots;
  // Transport a representative root along each orbit.
  std::vector<bool> assigned(a.size(), false);
  for (const auto &orbit : a.orbits()) {
    const std::size_t rep = orbit.front();
    assigned[rep] = true;
    std::deque<std::size_t> queue{rep};
    while (!queue.empty()) {
      const std::size_t h = queue.front();
      queue.pop_front();
      for (const auto &w : g.generators()) {
        const std::size_t k = a.image(w, h);
        if (assigned[k])
          continue;
        roots[k] = w * roots[h];
        assigned[k] = true;
        queue.push_back(k);
      }
    }
  }
  if (check(roots))
    return roots;
  return std::nullopt;
}

CatalogGroup build(const GroupSpec &spec, std::size_t order_bound) {
  std::optional<CoxeterSpec> cox;
  std::optional<int> st;
  Built built = std::visit(
      [&](const auto &s) -> Built {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ImprimitiveSpec>) {
          bool ess = false;
          Built b = build_imprimitive(s, order_bound, ess);
          cox = imprimitive_coxeter_type(s, ess);
          return b;
        } else if constexpr (std::is_same_v<T, CoxeterSpec>) {
          bool ess = false;
          Built b = build_imprimitive(coxeter_model(s), order_bound, ess);
          cox = s;
          return b;
        } else if constexpr (std::is_same_v<T, ExceptionalSpec>) {
          std::vector<Matrix> gens;
          if (s.shephard_todd == 4)
            gens = g4_generators();
          else if (s.shephard_todd == 12)
            gens = g12_generators();
          else
            throw std::invalid_argument("no model for exceptional group G" + std::to_string(s.shephard_todd) +
                                        "; supported models: G4, G12");
          st = s.shephard_todd;
          auto g = GroupModel::generate(std::move(gens), order_bound);
          auto a = arrangement_of(g);
          return {std::move(g), std::move(a)};
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          if (s.generators.empty())
            throw std::invalid_argument("explicit group needs at least one generator");
          for (const auto &m : s.generators)
            if (m.rows() != static_cast<std::size_t>(s.dim))
              throw std::invalid_argument("explicit generator dimension mismatch");
          auto g = GroupModel::generate(s.generators, order_bound);
          auto a = arrangement_of(g);
          return {std::move(g), std::move(a)};
        } else {
          if (s.factors.empty())
            throw std::invalid_argument("product needs at least one factor");
          std::vector<std::vector<Matrix>> factor_gens;
          std::vector<std::size_t> dims;
          for (const auto &f : s.factors) {
            auto gens = spec_generators(f, order_bound);
            dims.push_back(gens.front().rows());
            factor_gens.push_back(std::move(gens));
          }
          std::vector<Matrix> gens;
          for (std::size_t k = 0; k < factor_gens.size(); ++k)
            for (const auto &m : factor_gens[k]) {
              std::vector<Matrix> blocks;
              for (std::size_t j = 0; j < dims.size(); ++j)
                blocks.push_back(j == k ? m : Matrix::identity(dims[j]));
              gens.push_back(block_diagonal(blocks));
            }
          auto g = GroupModel::generate(std::move(gens), order_bound);
          auto a = arrangement_of(g);
          return {std::move(g), std::move(a)};
        }
      },
      spec.kind);

  CatalogGroup out{spec, spec_name(spec), std::move(built.group), std::move(built.arrangement), cox, {}, st};
  if (out.coxeter) {
    auto roots = signed_roots(out.group, out.arrangement);
    if (!roots)
      throw std::logic_error("Coxeter model " + out.name + " has no signed root system");
    out.positive_roots = std::move(*roots);
  }
  return out;
}

} // namespace reflwb
