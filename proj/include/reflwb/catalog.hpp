#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reflwb/arrangement.hpp"
#include "reflwb/matgroup.hpp"

namespace reflwb {

/// G(de, e, r): monomial r x r matrices over mu_de whose entry product lies in mu_d.
struct ImprimitiveSpec {
  int d = 1;
  int e = 1;
  int r = 1;
  /// Restrict to the root span. Defaults to on for d = e = 1, the only non-essential case.
  std::optional<bool> essentialize;
};

enum class CoxeterType { A, B, D, I2 };

struct CoxeterSpec {
  CoxeterType type = CoxeterType::A;
  int n = 1; ///< rank for A/B/D, the dihedral parameter m for I2
};

struct ExceptionalSpec {
  int shephard_todd = 4;
};

struct ExplicitSpec {
  int dim = 1;
  int cyclotomic_order = 1;
  std::vector<Matrix> generators;
};

struct GroupSpec;

/// Block-diagonal direct sum of the factor models.
struct ProductSpec {
  std::vector<GroupSpec> factors;
};

struct GroupSpec {
  std::variant<ImprimitiveSpec, CoxeterSpec, ExceptionalSpec, ExplicitSpec, ProductSpec> kind;
};

std::string coxeter_name(const CoxeterSpec &c);
std::string spec_name(const GroupSpec &spec);

struct CatalogGroup {
  GroupSpec spec;
  std::string name;
  GroupModel group;
  Arrangement arrangement;
  /// Set when the model is a finite Coxeter group of type A, B, D or I2.
  std::optional<CoxeterSpec> coxeter;
  /// Coxeter only: one root per hyperplane with w e_H = +-e_{w(H)} for all w.
  std::vector<Vector> positive_roots;
  std::optional<int> shephard_todd;
};

CatalogGroup build(const GroupSpec &spec, std::size_t order_bound = kDefaultOrderBound);

/// Convenience constructors.
GroupSpec imprimitive(int d, int e, int r);
GroupSpec coxeter(CoxeterType type, int n);
GroupSpec exceptional(int shephard_todd);
GroupSpec product_of(std::vector<GroupSpec> factors);

/// Generators of G(de, e, r) over Q(zeta_de).
std::vector<Matrix> imprimitive_generators(int d, int e, int r);
/// s = diag(1, j), t = (1/3)(1+2j, j-1; 2j-2, j+2) over Q(zeta_3).
std::vector<Matrix> g4_generators();
/// a, b, c over Q(zeta_8) with sqrt(-2) = zeta_8 + zeta_8^3.
std::vector<Matrix> g12_generators();
/// The hermitian form (2, 1+sqrt(-2); 1-sqrt(-2), 2) of the G12 model.
Matrix g12_reference_form();
/// The twelve root vectors listed for the G12 model, in table order.
std::vector<Vector> g12_reference_roots();
/// Labels (words in a, b, c) attached to g12_reference_roots().
std::vector<std::string> g12_reference_labels();

CycNum sqrt_minus_two();

/// Roots rescaled along W-orbits so that w e_H = +-e_{w(H)}; nullopt when impossible.
std::optional<std::vector<Vector>> signed_roots(const GroupModel &g, const Arrangement &a);

} // namespace reflwb
