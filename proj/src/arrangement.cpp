#include "reflwb/arrangement.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

namespace reflwb {

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes, Matrix form)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), form_(std::move(form)) {
  std::map<std::size_t, std::vector<std::size_t>> by_orbit;
  for (std::size_t h = 0; h < hyperplanes_.size(); ++h)
    by_orbit[hyperplanes_[h].orbit].push_back(h);
  for (auto &[id, members] : by_orbit)
    orbits_.push_back(members);
}

std::vector<Vector> Arrangement::forms() const {
  std::vector<Vector> out;
  for (const auto &h : hyperplanes_)
    out.push_back(h.alpha);
  return out;
}

std::vector<Vector> Arrangement::roots() const {
  std::vector<Vector> out;
  for (const auto &h : hyperplanes_)
    out.push_back(h.root);
  return out;
}

std::optional<std::size_t> Arrangement::find_by_root(const Vector &v) const {
  for (std::size_t h = 0; h < hyperplanes_.size(); ++h)
    if (proportional(v, hyperplanes_[h].root))
      return h;
  return std::nullopt;
}

std::size_t Arrangement::image(const Matrix &w, std::size_t h) const {
  auto found = find_by_root(w * hyperplanes_.at(h).root);
  if (!found)
    throw std::logic_error("group element does not permute the arrangement");
  return *found;
}

std::vector<std::size_t> Arrangement::permutation(const Matrix &w) const {
  std::vector<std::size_t> perm(size());
  for (std::size_t h = 0; h < size(); ++h)
    perm[h] = image(w, h);
  return perm;
}

Vector root_from_form(const Matrix &form, const Vector &alpha) {
  return normalize_first_nonzero(inverse(form) * conj(alpha));
}

Arrangement arrangement_of(const GroupModel &g) {
  const auto refl = reflections(g);
  std::vector<Hyperplane> hyps;
  std::vector<std::size_t> counts;
  for (const auto &r : refl) {
    if (r.hyperplane >= hyps.size()) {
      hyps.resize(r.hyperplane + 1);
      counts.resize(r.hyperplane + 1, 0);
    }
    ++counts[r.hyperplane];
    if (counts[r.hyperplane] == 1)
      hyps[r.hyperplane].alpha = reflection_form(g.element(r.element));
    if (r.distinguished)
      hyps[r.hyperplane].distinguished_reflection = r.element;
  }
  Matrix form = invariant_hermitian_form(g);
  for (std::size_t h = 0; h < hyps.size(); ++h) {
    hyps[h].d = static_cast<int>(counts[h]) + 1;
    hyps[h].root = root_from_form(form, hyps[h].alpha);
  }

  Arrangement a(g.dim(), std::move(hyps), std::move(form));
  // Orbits by union-find over the generator permutations.
  std::vector<std::size_t> parent(a.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &gen : g.generators()) {
    const auto perm = a.permutation(gen);
    for (std::size_t h = 0; h < perm.size(); ++h) {
      if (a.hyperplanes_[perm[h]].d != a.hyperplanes_[h].d)
        throw std::logic_error("group action does not preserve d_H");
      const auto x = find(h), y = find(perm[h]);
      if (x != y)
        parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::map<std::size_t, std::size_t> orbit_ids;
  for (std::size_t h = 0; h < a.size(); ++h) {
    const auto root = find(h);
    auto [it, inserted] = orbit_ids.emplace(root, orbit_ids.size());
    a.hyperplanes_[h].orbit = it->second;
  }
  a.orbits_.clear();
  a.orbits_.resize(orbit_ids.size());
  for (std::size_t h = 0; h < a.size(); ++h)
    a.orbits_[a.hyperplanes_[h].orbit].push_back(h);
  return a;
}

LinearArrangement linear_part(const Arrangement &a) { return {a.dim(), a.forms()}; }

LinearArrangement product(const LinearArrangement &a, const LinearArrangement &b) {
  LinearArrangement out{a.dim + b.dim, {}};
  for (const auto &f : a.forms) {
    Vector v(out.dim);
    std::copy(f.begin(), f.end(), v.begin());
    out.forms.push_back(std::move(v));
  }
  for (const auto &f : b.forms) {
    Vector v(out.dim);
    std::copy(f.begin(), f.end(), v.begin() + static_cast<std::ptrdiff_t>(a.dim));
    out.forms.push_back(std::move(v));
  }
  return out;
}

bool is_essential(const LinearArrangement &a) { return rank_of_vectors(a.forms) == a.dim; }

bool is_essential(const Arrangement &a) { return is_essential(linear_part(a)); }

Irreducibility irreducibility(const Arrangement &a) {
  if (!is_essential(a))
    throw std::invalid_argument("irreducibility test needs an essential arrangement");
  Irreducibility out;
  const auto roots = a.roots();
  auto orthogonal = [&](std::size_t x, std::size_t y) {
    return hermitian(a.form(), roots[x], roots[y]).is_zero();
  };

  std::vector<std::size_t> chosen;
  if (!roots.empty())
    chosen.push_back(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t h = 0; h < roots.size() && !grew; ++h) {
      if (std::find(chosen.begin(), chosen.end(), h) != chosen.end())
        continue;
      const bool linked = std::any_of(chosen.begin(), chosen.end(), [&](auto c) { return !orthogonal(h, c); });
      if (!linked)
        continue;
      std::vector<Vector> trial;
      for (auto c : chosen)
        trial.push_back(roots[c]);
      trial.push_back(roots[h]);
      if (rank_of_vectors(trial) == trial.size()) {
        chosen.push_back(h);
        grew = true;
      }
    }
  }
  out.basis_graph.vertices = chosen;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (!orthogonal(chosen[i], chosen[j]))
        out.basis_graph.edges.emplace_back(chosen[i], chosen[j]);
  out.irreducible = chosen.size() == a.dim();

  // Orthogonal factors: components of the non-orthogonality graph on all roots.
  std::vector<std::size_t> component(roots.size(), roots.size());
  for (std::size_t start = 0; start < roots.size(); ++start) {
    if (component[start] != roots.size())
      continue;
    const std::size_t id = out.parts.size();
    out.parts.emplace_back();
    std::vector<std::size_t> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      out.parts[id].push_back(x);
      for (std::size_t y = 0; y < roots.size(); ++y)
        if (component[y] == roots.size() && !orthogonal(x, y)) {
          component[y] = id;
          stack.push_back(y);
        }
    }
    std::sort(out.parts[id].begin(), out.parts[id].end());
  }
  for (const auto &part : out.parts) {
    std::vector<Vector> vs;
    for (auto h : part)
      vs.push_back(roots[h]);
    out.part_ranks.push_back(rank_of_vectors(vs));
  }
  return out;
}

IntPoly poly_multiply(const IntPoly &a, const IntPoly &b) {
  if (a.empty() || b.empty())
    return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

std::optional<IntPoly> poly_divide(const IntPoly &a, const IntPoly &b) {
  IntPoly num = a;
  while (!num.empty() && num.back() == 0)
    num.pop_back();
  if (b.empty() || b.back() == 0)
    throw std::invalid_argument("division by a polynomial without leading coefficient");
  if (num.size() < b.size())
    return num.empty() ? std::optional<IntPoly>(IntPoly{}) : std::nullopt;
  IntPoly q(num.size() - b.size() + 1, 0);
  for (std::size_t k = num.size() - 1;; --k) {
    if (num[k] % b.back() != 0)
      return std::nullopt;
    const long c = num[k] / b.back();
    q[k - b.size() + 1] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      num[k - b.size() + 1 + i] -= c * b[i];
    if (k == b.size() - 1)
      break;
  }
  for (auto x : num)
    if (x != 0)
      return std::nullopt;
  return q;
}

IntPoly poincare_polynomial(const LinearArrangement &a) {
  std::vector<Vector> forms;
  for (const auto &f : a.forms) {
    if (f.size() != a.dim)
      throw std::invalid_argument("linear form has the wrong length");
    if (is_zero(f))
      throw std::invalid_argument("zero linear form in arrangement");
    if (std::none_of(forms.begin(), forms.end(), [&](const Vector &g) { return proportional(f, g); }))
      forms.push_back(f);
  }
  const std::size_t m = forms.size();
  if (m > kPoincareMaxHyperplanes)
    throw ArrangementTooLarge("Poincare polynomial refused: " + std::to_string(m) + " hyperplanes exceed the limit of " +
                              std::to_string(kPoincareMaxHyperplanes));
  using Mask = std::uint32_t;
  auto rank_of = [&](Mask mask) {
    std::vector<Vector> vs;
    for (std::size_t h = 0; h < m; ++h)
      if (mask & (Mask{1} << h))
        vs.push_back(forms[h]);
    return rank_of_vectors(vs);
  };

  // Flats of the intersection lattice, keyed by the set of hyperplanes containing them.
  std::map<Mask, std::size_t> flats{{0, 0}};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask x : frontier) {
      const std::size_t r = flats.at(x);
      for (std::size_t h = 0; h < m; ++h) {
        if (x & (Mask{1} << h))
          continue;
        Mask s = x | (Mask{1} << h);
        for (std::size_t k = 0; k < m; ++k)
          if (!(s & (Mask{1} << k)) && rank_of(s | (Mask{1} << k)) == r + 1)
            s |= Mask{1} << k;
        if (flats.emplace(s, r + 1).second)
          next.push_back(s);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<Mask, std::size_t>> ordered(flats.begin(), flats.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](auto &l, auto &r) { return l.second < r.second; });
  std::map<Mask, long> mobius;
  IntPoly poly(a.dim + 1, 0);
  for (const auto &[x, r] : ordered) {
    long mu = 0;
    if (x == 0) {
      mu = 1;
    } else {
      for (const auto &[y, val] : mobius)
        if (y != x && (y & x) == y)
          mu -= val;
    }
    mobius[x] = mu;
    poly[r] += (r % 2 == 0 ? mu : -mu);
  }
  while (poly.size() > 1 && poly.back() == 0)
    poly.pop_back();
  return poly;
}

IntPoly poincare_polynomial(const Arrangement &a) { return poincare_polynomial(linear_part(a)); }

Essentialized essentialize(const GroupModel &g, std::size_t order_bound) {
  const Arrangement a = arrangement_of(g);
  std::vector<Vector> basis;
  for (const auto &root : a.roots()) {
    auto trial = basis;
    trial.push_back(root);
    if (rank_of_vectors(trial) == trial.size())
      basis = std::move(trial);
  }
  if (basis.empty())
    throw std::invalid_argument("cannot essentialize a group without reflections");
  const Matrix b = Matrix::from_columns(basis);
  std::vector<Matrix> gens;
  for (const auto &w : g.generators()) {
    std::vector<Vector> cols;
    for (const auto &v : basis) {
      auto c = solve(b, w * v);
      if (!c)
        throw std::logic_error("root span is not invariant");
      cols.push_back(std::move(*c));
    }
    gens.push_back(Matrix::from_columns(cols));
  }
  GroupModel restricted = GroupModel::generate(std::move(gens), order_bound, basis.size());
  Arrangement ra = arrangement_of(restricted);
  return {std::move(restricted), std::move(ra), b};
}

} // namespace reflwb
