#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace reflwb {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Element of the cyclotomic field Q(zeta_m).
///
/// Stored densely as m rational coefficients of zeta_m^0 .. zeta_m^{m-1}.
/// The canonical form is the remainder modulo the m-th cyclotomic polynomial,
/// so only the first phi(m) slots can be nonzero and equality of values at a
/// common order is equality of coefficient vectors. Binary operations on
/// operands of different orders first lift both to the lcm of the orders.
class CycNum {
public:
  CycNum() : CycNum(0) {}
  CycNum(long value); // NOLINT(google-explicit-constructor)
  CycNum(const Rational &value); // NOLINT(google-explicit-constructor)

  /// Builds from raw coefficients of zeta_order^k and reduces.
  static CycNum from_coeffs(int order, std::vector<Rational> coeffs);
  /// zeta_order^k for any integer k.
  static CycNum zeta(int order, long k = 1);

  int order() const { return order_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }

  /// Same value expressed in Q(zeta_new_order); new_order must be a multiple of order().
  CycNum lifted(int new_order) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant term; only meaningful when is_rational().
  const Rational &rational_part() const { return coeffs_.front(); }

  CycNum conj() const;
  CycNum inverse() const;
  CycNum pow(long exponent) const;
  /// Field automorphism zeta_m -> zeta_m^n; requires gcd(n, m) = 1.
  CycNum galois(long n) const;
  std::complex<double> embed() const;

  /// Re-applies the reduction; a no-op on values produced by this class.
  CycNum reduced() const;

  std::size_t hash() const;
  std::string to_string() const;

  CycNum &operator+=(const CycNum &rhs);
  CycNum &operator-=(const CycNum &rhs);
  CycNum &operator*=(const CycNum &rhs);
  CycNum &operator/=(const CycNum &rhs);

  friend CycNum operator+(CycNum lhs, const CycNum &rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum &rhs) { return lhs -= rhs; }
  friend CycNum operator*(const CycNum &lhs, const CycNum &rhs);
  friend CycNum operator/(CycNum lhs, const CycNum &rhs) { return lhs /= rhs; }
  CycNum operator-() const;

  friend bool operator==(const CycNum &lhs, const CycNum &rhs);
  friend bool operator!=(const CycNum &lhs, const CycNum &rhs) { return !(lhs == rhs); }

private:
  CycNum(int order, std::vector<Rational> coeffs, bool reduce);
  void reduce();

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const CycNum &x);

/// Multiplicative order of x if it is a root of unity.
std::optional<int> as_root_of_unity(const CycNum &x);

/// Exponent k in [0, order) with x = zeta_order^k, if any.
std::optional<int> root_exponent(const CycNum &x, int order);

/// Euler phi.
int euler_phi(int m);
/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<long> &cyclotomic_polynomial(int m);

long lcm_of(long a, long b);

/// Parses "p/q" or "p" into a rational.
Rational parse_rational(const std::string &text);

struct CycNumHash {
  std::size_t operator()(const CycNum &x) const { return x.hash(); }
};

} // namespace reflwb
