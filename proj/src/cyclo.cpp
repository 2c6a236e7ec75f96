#include "reflwb/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace reflwb {

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long> &den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    if (c == 0)
      continue;
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i)
      num[k - dn + i] -= c * den[i];
  }
  return quot;
}

long positive_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace

long lcm_of(long a, long b) { return std::lcm(a, b); }

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

const std::vector<long> &cyclotomic_polynomial(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<long>>> cache;
  if (m < 1)
    throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end())
    return *it->second;
  // x^m - 1 = prod_{d | m} Phi_d(x); computed without recursion into the lock.
  std::map<int, std::vector<long>> local;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0)
      continue;
    auto cached = cache.find(d);
    if (cached != cache.end()) {
      local[d] = *cached->second;
      continue;
    }
    std::vector<long> p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (auto &[e, phi_e] : local)
      if (d % e == 0 && e < d)
        p = poly_divide_exact(p, phi_e);
    local[d] = p;
    cache.emplace(d, std::make_unique<const std::vector<long>>(p));
  }
  return *cache.at(m);
}

Rational parse_rational(const std::string &text) {
  std::string trimmed;
  for (char c : text)
    if (c != ' ')
      trimmed.push_back(c);
  if (trimmed.empty())
    throw std::invalid_argument("empty rational literal");
  if (!trimmed.empty() && trimmed.front() == '+')
    trimmed.erase(trimmed.begin());
  Rational q;
  try {
    q = Rational(trimmed, 10);
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("bad rational literal '" + text + "'");
  }
  if (q.get_den() == 0)
    throw DivisionByZero("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

CycNum::CycNum(long value) : order_(1), coeffs_{Rational(value)} {}

CycNum::CycNum(const Rational &value) : order_(1), coeffs_{value} { coeffs_[0].canonicalize(); }

CycNum::CycNum(int order, std::vector<Rational> coeffs, bool reduce_now)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (reduce_now)
    reduce();
}

CycNum CycNum::from_coeffs(int order, std::vector<Rational> coeffs) {
  if (order < 1)
    throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rational> folded(order);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].canonicalize();
    folded[k % order] += coeffs[k];
  }
  return CycNum(order, std::move(folded), true);
}

CycNum CycNum::zeta(int order, long k) {
  if (order < 1)
    throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rational> c(order);
  c[positive_mod(k, order)] = 1;
  return CycNum(order, std::move(c), true);
}

void CycNum::reduce() {
  const auto &phi = cyclotomic_polynomial(order_);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = order_ - 1; k >= deg; --k) {
    if (sgn(coeffs_[k]) == 0)
      continue;
    const Rational c = coeffs_[k];
    for (int i = 0; i <= deg; ++i)
      if (phi[i] != 0)
        coeffs_[k - deg + i] -= c * phi[i];
  }
}

CycNum CycNum::reduced() const {
  CycNum copy = *this;
  copy.reduce();
  return copy;
}

CycNum CycNum::lifted(int new_order) const {
  if (new_order == order_)
    return *this;
  if (new_order % order_ != 0 && is_rational())
    return CycNum(rational_part()).lifted(new_order);
  if (new_order % order_ != 0)
    throw std::invalid_argument("lift target must be a multiple of the order");
  const int step = new_order / order_;
  std::vector<Rational> c(new_order);
  for (int k = 0; k < order_; ++k)
    if (sgn(coeffs_[k]) != 0)
      c[k * step] = coeffs_[k];
  return CycNum(new_order, std::move(c), true);
}

bool CycNum::is_zero() const {
  for (const auto &c : coeffs_)
    if (sgn(c) != 0)
      return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0)
      return false;
  return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

CycNum &CycNum::operator+=(const CycNum &rhs) {
  if (rhs.order_ == order_) {
    for (int k = 0; k < order_; ++k)
      coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  const int m = static_cast<int>(lcm_of(order_, rhs.order_));
  *this = lifted(m);
  return *this += rhs.lifted(m);
}

CycNum &CycNum::operator-=(const CycNum &rhs) {
  if (rhs.order_ == order_) {
    for (int k = 0; k < order_; ++k)
      coeffs_[k] -= rhs.coeffs_[k];
    return *this;
  }
  const int m = static_cast<int>(lcm_of(order_, rhs.order_));
  *this = lifted(m);
  return *this -= rhs.lifted(m);
}

CycNum operator*(const CycNum &lhs, const CycNum &rhs) {
  if (lhs.order_ != rhs.order_) {
    const int m = static_cast<int>(lcm_of(lhs.order_, rhs.order_));
    return lhs.lifted(m) * rhs.lifted(m);
  }
  const int m = lhs.order_;
  std::vector<Rational> out(m);
  Rational tmp;
  for (int i = 0; i < m; ++i) {
    if (sgn(lhs.coeffs_[i]) == 0)
      continue;
    for (int j = 0; j < m; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0)
        continue;
      tmp = lhs.coeffs_[i] * rhs.coeffs_[j];
      out[(i + j) % m] += tmp;
    }
  }
  return CycNum(m, std::move(out), true);
}

CycNum &CycNum::operator*=(const CycNum &rhs) { return *this = *this * rhs; }

CycNum &CycNum::operator/=(const CycNum &rhs) { return *this *= rhs.inverse(); }

CycNum CycNum::operator-() const {
  CycNum copy = *this;
  for (auto &c : copy.coeffs_)
    c = -c;
  return copy;
}

bool operator==(const CycNum &lhs, const CycNum &rhs) {
  if (lhs.order_ == rhs.order_)
    return lhs.coeffs_ == rhs.coeffs_;
  const int m = static_cast<int>(lcm_of(lhs.order_, rhs.order_));
  return lhs.lifted(m).coeffs_ == rhs.lifted(m).coeffs_;
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::galois(long n) const {
  if (std::gcd(positive_mod(n, order_), static_cast<long>(order_)) != 1 && order_ > 1)
    throw std::invalid_argument("galois exponent " + std::to_string(n) +
                                " is not coprime to the cyclotomic order " + std::to_string(order_));
  std::vector<Rational> c(order_);
  for (int k = 0; k < order_; ++k)
    if (sgn(coeffs_[k]) != 0)
      c[positive_mod(static_cast<long>(k) * n, order_)] += coeffs_[k];
  return CycNum(order_, std::move(c), true);
}

CycNum CycNum::inverse() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
  const int deg = euler_phi(order_);
  // Column j of the system is a * zeta^j in the reduced basis.
  std::vector<std::vector<Rational>> sys(deg, std::vector<Rational>(deg + 1));
  for (int j = 0; j < deg; ++j) {
    const CycNum col = *this * zeta(order_, j);
    for (int i = 0; i < deg; ++i)
      sys[i][j] = col.coeffs_[i];
  }
  sys[0][deg] = 1;
  for (int col = 0; col < deg; ++col) {
    int pivot = col;
    while (pivot < deg && sgn(sys[pivot][col]) == 0)
      ++pivot;
    if (pivot == deg)
      throw DivisionByZero("singular multiplication map while inverting");
    std::swap(sys[pivot], sys[col]);
    const Rational inv = 1 / sys[col][col];
    for (int k = col; k <= deg; ++k)
      sys[col][k] *= inv;
    for (int row = 0; row < deg; ++row) {
      if (row == col || sgn(sys[row][col]) == 0)
        continue;
      const Rational f = sys[row][col];
      for (int k = col; k <= deg; ++k)
        sys[row][k] -= f * sys[col][k];
    }
  }
  std::vector<Rational> c(order_);
  for (int i = 0; i < deg; ++i)
    c[i] = sys[i][deg];
  return CycNum(order_, std::move(c), false);
}

CycNum CycNum::pow(long exponent) const {
  if (exponent < 0)
    return inverse().pow(-exponent);
  CycNum result(1);
  CycNum base = *this;
  while (exponent > 0) {
    if (exponent & 1)
      result *= base;
    exponent >>= 1;
    if (exponent > 0)
      base *= base;
  }
  return result;
}

std::complex<double> CycNum::embed() const {
  std::complex<double> z = 0;
  for (int k = 0; k < order_; ++k) {
    if (sgn(coeffs_[k]) == 0)
      continue;
    const double angle = 2.0 * std::numbers::pi * k / order_;
    z += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::size_t CycNum::hash() const {
  // Rationals hash the same at every order; other values are hashed at their stored order.
  const bool rational = is_rational();
  std::size_t h = rational ? 1 : static_cast<std::size_t>(order_);
  const std::size_t used = rational ? 1 : coeffs_.size();
  for (std::size_t k = 0; k < used; ++k) {
    const Rational &c = coeffs_[k];
    const std::size_t num = mpz_get_ui(c.get_num_mpz_t()) ^ (mpz_sgn(c.get_num_mpz_t()) < 0 ? 0x9e37u : 0u);
    const std::size_t den = mpz_get_ui(c.get_den_mpz_t());
    h ^= num + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= den + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const CycNum &x) {
  if (x.is_rational())
    return os << x.rational_part().get_str();
  bool first = true;
  for (int k = 0; k < x.order(); ++k) {
    const Rational &c = x.coeffs()[k];
    if (sgn(c) == 0)
      continue;
    if (!first)
      os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0)
      os << "-";
    const Rational mag = abs(c);
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1)
        os << mag.get_str() << "*";
      os << "z" << x.order();
      if (k > 1)
        os << "^" << k;
    }
    first = false;
  }
  return os;
}

std::optional<int> as_root_of_unity(const CycNum &x) {
  if (x.is_zero())
    return std::nullopt;
  // Roots of unity in Q(zeta_m) have order dividing lcm(2, m).
  const int bound = static_cast<int>(lcm_of(2, x.order()));
  CycNum power = x;
  for (int k = 1; k <= bound; ++k) {
    if (power.is_one())
      return k;
    power *= x;
  }
  return std::nullopt;
}

std::optional<int> root_exponent(const CycNum &x, int order) {
  for (int k = 0; k < order; ++k)
    if (CycNum::zeta(order, k) == x)
      return k;
  return std::nullopt;
}

} // namespace reflwb
