#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "reflwb/arrangement.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/matgroup.hpp"

namespace reflwb {

/// Function on the conjugacy classes of a group. Holds a non-owning pointer;
/// the group must outlive it.
class ClassFunction {
public:
  ClassFunction(const GroupModel &g, std::vector<CycNum> values);

  const GroupModel &group() const { return *group_; }
  const std::vector<CycNum> &values() const { return values_; }
  const CycNum &at_class(std::size_t c) const { return values_.at(c); }
  const CycNum &at_element(std::size_t w) const { return values_.at(group_->class_of(w)); }

  ClassFunction operator+(const ClassFunction &rhs) const;
  ClassFunction operator-(const ClassFunction &rhs) const;
  /// Pointwise product (character of the tensor product).
  ClassFunction operator*(const ClassFunction &rhs) const;
  ClassFunction galois(long n) const;

  friend bool operator==(const ClassFunction &a, const ClassFunction &b);
  friend bool operator!=(const ClassFunction &a, const ClassFunction &b) { return !(a == b); }

private:
  void check_same_group(const ClassFunction &rhs) const;
  const GroupModel *group_;
  std::vector<CycNum> values_;
};

ClassFunction trivial_character(const GroupModel &g);
/// Character of the defining representation.
ClassFunction defining_character(const GroupModel &g);
/// Linear character sending generator k to generator_values[k], evaluated along words.
ClassFunction linear_character(const GroupModel &g, const std::vector<CycNum> &generator_values);
/// Permutation character of g acting on the given hyperplanes of a.
ClassFunction permutation_character(const GroupModel &g, const Arrangement &a, const std::vector<std::size_t> &subset);

/// |W|^-1 sum_w f(w) conj(h(w)).
CycNum inner_product(const ClassFunction &f, const ClassFunction &h);

/// The family chi_n of R_n, from the eigenvalues of class representatives on fixed roots.
class CharacterFamily {
public:
  CharacterFamily(const GroupModel &g, const Arrangement &a);

  const GroupModel &group() const { return *group_; }
  /// lcm of the orders of all eigenvalues on roots; every value of chi_n lies in Q(zeta_kappa).
  int kappa() const { return kappa_; }
  ClassFunction chi(long n) const;
  /// chi_n restricted to one W-orbit of hyperplanes.
  ClassFunction chi_orbit(long n, std::size_t orbit) const;

private:
  struct Eigen {
    std::size_t hyperplane;
    int exponent; ///< eigenvalue is zeta_kappa^exponent
  };
  ClassFunction evaluate(long n, const std::vector<bool> *mask) const;

  const GroupModel *group_;
  const Arrangement *arrangement_;
  int kappa_ = 1;
  std::vector<std::vector<Eigen>> per_class_;
};

ClassFunction chi(const GroupModel &g, const Arrangement &a, long n);

/// Elements w with chi_n(w) = chi_n(1).
std::vector<std::size_t> kernel_of_Rn(const GroupModel &g, const Arrangement &a, long n);
/// {w in Z(W) : w^n = 1}.
std::vector<std::size_t> central_kernel(const GroupModel &g, long n);

/// Smallest p > 0 with chi_{n+p} = chi_n for all n, certified over a full exponent window.
int check_periodicity(const GroupModel &g, const Arrangement &a);

/// chi_n == c_n o chi_1 with c_n: zeta_kappa -> zeta_kappa^n; n must be coprime to kappa.
bool galois_check(const GroupModel &g, const Arrangement &a, long n);

struct RestrictionResult {
  bool holds = true;
  bool vacuous = false;
  std::size_t fixer_order = 1;
  std::size_t fixed_hyperplanes = 0;
  std::string notice;
};

/// A vector on hyperplane h lying on as few other hyperplanes as possible.
Vector generic_vector_in(const Arrangement &a, std::size_t h);

/// Res chi_n = chi_n(W0) + permutation character on A \ A0, for n = 0..kappa.
RestrictionResult restriction_check(const GroupModel &g, const Arrangement &a, const Vector &v);

struct SignModelRep {
  std::vector<Vector> positive_roots;
  std::vector<Matrix> generator_matrices; ///< signed permutation matrices on the basis f_H
};

/// w.f_H = +-f_{w(H)} according to whether w.e_H is a positive or negative root.
SignModelRep coxeter_sign_model(const CatalogGroup &cg);

struct SignModelCheck {
  bool monomial = true;      ///< every matrix has entries in {0, +-1}, one per row and column
  bool homomorphism = true;  ///< consistent with every Cayley-graph edge
  bool sign_rule = true;     ///< every element obeys the positive/negative root rule
  std::vector<Matrix> element_matrices;
};

SignModelCheck check_sign_model(const CatalogGroup &cg, const SignModelRep &rep);
ClassFunction sign_model_character(const CatalogGroup &cg, const SignModelCheck &check);

struct G4TableCheck {
  bool u_norm_one = false;
  bool traces_match = false; ///< tr A_alpha(s) = -alpha
  std::array<bool, 6> rows{};
  std::array<std::string, 6> labels{};
  /// chi_5 = A_1 + A_j, the Galois conjugate of chi_1 (not part of all()).
  bool r5_is_a1_plus_aj = false;
  bool all() const;
};

/// Character identities of R_0..R_5 on the built-in G4 model.
G4TableCheck g4_table_check();

} // namespace reflwb
