#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "reflwb/linalg.hpp"

namespace reflwb {

inline constexpr std::size_t kDefaultOrderBound = 10000;

class NotFiniteError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite matrix group over a cyclotomic field, fully enumerated.
///
/// Elements are stored in breadth-first order from the identity (index 0),
/// each with the shortest generator word reaching it. Immutable once built.
class GroupModel {
public:
  /// Closure of the generators under multiplication. `dim` is required
  /// when the generator list is empty.
  static GroupModel generate(std::vector<Matrix> generators, std::size_t order_bound = kDefaultOrderBound,
                             std::optional<std::size_t> dim = std::nullopt);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  /// Cyclotomic order shared by every matrix entry.
  int field_order() const { return field_order_; }

  const std::vector<Matrix> &generators() const { return generators_; }
  const std::vector<Matrix> &elements() const { return elements_; }
  const Matrix &element(std::size_t i) const { return elements_.at(i); }
  std::size_t identity_index() const { return 0; }

  std::optional<std::size_t> index_of(const Matrix &m) const;
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const { return inverses_.at(i); }
  /// Generator indices g_1..g_k with element(i) = gen[g_1] * ... * gen[g_k].
  std::vector<std::size_t> word(std::size_t i) const;
  std::size_t element_order(std::size_t i) const { return element_orders_.at(i); }
  /// Least common multiple of element orders.
  std::size_t exponent() const;

  const std::vector<std::vector<std::size_t>> &classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }
  std::size_t class_size(std::size_t c) const { return classes_.at(c).size(); }
  std::size_t class_representative(std::size_t c) const { return classes_.at(c).front(); }
  const std::vector<std::size_t> &center() const { return center_; }
  bool is_central(std::size_t i) const;

private:
  GroupModel() = default;
  void compute_inverses_and_orders();
  void compute_classes();
  void compute_center();

  std::size_t dim_ = 0;
  int field_order_ = 1;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  std::unordered_map<Matrix, std::size_t, MatrixHash> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_generator_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> element_orders_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> center_;
};

struct Reflection {
  std::size_t element = 0;
  std::size_t hyperplane = 0;
  CycNum eigenvalue;
  bool distinguished = false;
};

/// Linear form cutting out the fixed hyperplane of a reflection, first nonzero coordinate 1.
Vector reflection_form(const Matrix &reflection);
/// True iff the fixed space of m has codimension 1.
bool is_reflection(const Matrix &m);

/// All reflections of g with hyperplane indices in order of first appearance.
std::vector<Reflection> reflections(const GroupModel &g);

/// Positive-definite hermitian form F with w^* F w = F for all w in g.
Matrix invariant_hermitian_form(const GroupModel &g);
/// Exact positive-definiteness test via leading principal minors; throws if a
/// minor is not rational, since its sign cannot then be certified exactly.
bool is_positive_definite(const Matrix &hermitian_form);

/// Pointwise fixer of v, generated by the reflections of g that fix v.
GroupModel parabolic_fixer(const GroupModel &g, const Vector &v);

std::size_t conjugacy_class_of(const GroupModel &g, std::size_t element);

/// Minimal polynomial of m over its field, monic, low degree first.
std::vector<CycNum> minimal_polynomial(const Matrix &m);
/// gcd of the minimal polynomial with its derivative is 1.
bool is_semisimple(const Matrix &m);

/// Polynomial helpers over CycNum (low degree first, no trailing zeros).
std::vector<CycNum> poly_gcd(std::vector<CycNum> a, std::vector<CycNum> b);
std::vector<CycNum> poly_derivative(const std::vector<CycNum> &p);

} // namespace reflwb
