#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "reflwb/linalg.hpp"
#include "reflwb/matgroup.hpp"

namespace reflwb {

struct Hyperplane {
  Vector alpha; ///< linear form, first nonzero coordinate 1
  Vector root;  ///< spans the form-orthogonal line, first nonzero coordinate 1
  int d = 2;    ///< order of the pointwise stabilizer
  std::size_t distinguished_reflection = 0;
  std::size_t orbit = 0;
};

/// Reflection arrangement (A, d) of a finite reflection group.
class Arrangement {
public:
  Arrangement() = default;
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes, Matrix form);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane> &hyperplanes() const { return hyperplanes_; }
  const Hyperplane &operator[](std::size_t h) const { return hyperplanes_.at(h); }
  const Matrix &form() const { return form_; }
  const std::vector<std::vector<std::size_t>> &orbits() const { return orbits_; }

  std::vector<Vector> forms() const;
  std::vector<Vector> roots() const;

  /// Index of the hyperplane whose root is proportional to v.
  std::optional<std::size_t> find_by_root(const Vector &v) const;
  /// Index of w(H).
  std::size_t image(const Matrix &w, std::size_t h) const;
  /// perm[h] = index of w(H_h).
  std::vector<std::size_t> permutation(const Matrix &w) const;

private:
  friend Arrangement arrangement_of(const GroupModel &g);
  std::size_t dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  Matrix form_;
  std::vector<std::vector<std::size_t>> orbits_;
};

Arrangement arrangement_of(const GroupModel &g);

/// Root of H computed from the form: the line F-orthogonal to ker(alpha).
Vector root_from_form(const Matrix &form, const Vector &alpha);

/// A plain central arrangement given by its linear forms.
struct LinearArrangement {
  std::size_t dim = 0;
  std::vector<Vector> forms;
};

LinearArrangement linear_part(const Arrangement &a);
/// Direct sum: forms of the factors on complementary coordinate blocks.
LinearArrangement product(const LinearArrangement &a, const LinearArrangement &b);

bool is_essential(const LinearArrangement &a);
bool is_essential(const Arrangement &a);

struct RootGraph {
  std::vector<std::size_t> vertices; ///< hyperplane indices of the chosen roots
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct Irreducibility {
  bool irreducible = false;
  RootGraph basis_graph; ///< greedy connected independent set of roots
  std::vector<std::vector<std::size_t>> parts; ///< hyperplane indices per orthogonal factor
  std::vector<std::size_t> part_ranks;
};

/// Greedy root-graph test; throws std::invalid_argument for non-essential input.
Irreducibility irreducibility(const Arrangement &a);

/// Integer polynomial, low degree first.
using IntPoly = std::vector<long>;

inline constexpr std::size_t kPoincareMaxHyperplanes = 12;

class ArrangementTooLarge : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Poincare polynomial from the intersection lattice; refuses above 12 hyperplanes.
IntPoly poincare_polynomial(const LinearArrangement &a);
IntPoly poincare_polynomial(const Arrangement &a);

IntPoly poly_multiply(const IntPoly &a, const IntPoly &b);
/// Exact division; nullopt when b does not divide a over the integers.
std::optional<IntPoly> poly_divide(const IntPoly &a, const IntPoly &b);

struct Essentialized {
  GroupModel group;
  Arrangement arrangement;
  Matrix basis; ///< columns: roots spanning the essential subspace, in the original coordinates
};

/// Restricts g to the span of its roots.
Essentialized essentialize(const GroupModel &g, std::size_t order_bound = kDefaultOrderBound);

} // namespace reflwb
