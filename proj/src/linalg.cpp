#include "reflwb/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace reflwb {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<CycNum> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("matrix data size does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows) {
  if (rows.empty())
    return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector> &cols) {
  if (cols.empty())
    return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_)
      throw std::invalid_argument("ragged columns");
    for (std::size_t i = 0; i < m.rows_; ++i)
      m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::conj_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j).conj();
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

CycNum Matrix::trace() const {
  CycNum t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += (*this)(i, i);
  return t;
}

Matrix Matrix::lifted(int order) const {
  Matrix m = *this;
  for (auto &x : m.data_)
    x = x.lifted(order);
  return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum &aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum &bkj = b(k, j);
        if (!bkj.is_zero())
          c(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    c.data_[k] += b.data_[k];
  return c;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    c.data_[k] -= b.data_[k];
  return c;
}

Matrix Matrix::scaled(const CycNum &c) const {
  Matrix m = *this;
  for (auto &x : m.data_)
    x *= c;
  return m;
}

bool operator==(const Matrix &a, const Matrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto &x : data_)
    h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

Vector operator*(const Matrix &a, const Vector &v) {
  if (a.cols() != v.size())
    throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero())
        out[i] += a(i, j) * v[j];
  return out;
}

Vector operator*(const Vector &row, const Matrix &a) {
  if (a.rows() != row.size())
    throw std::invalid_argument("vector-matrix shape mismatch");
  Vector out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero() && !row[i].is_zero())
        out[j] += row[i] * a(i, j);
  return out;
}

CycNum dot(const Vector &a, const Vector &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot product length mismatch");
  CycNum s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero())
      s += a[i] * b[i];
  return s;
}

Vector scaled(const Vector &v, const CycNum &c) {
  Vector out = v;
  for (auto &x : out)
    x *= c;
  return out;
}

Vector conj(const Vector &v) {
  Vector out = v;
  for (auto &x : out)
    x = x.conj();
  return out;
}

bool is_zero(const Vector &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

CycNum hermitian(const Matrix &form, const Vector &x, const Vector &y) { return dot(conj(x), form * y); }

Vector normalize_first_nonzero(const Vector &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return scaled(v, x.inverse());
  throw std::invalid_argument("cannot normalize the zero vector");
}

std::optional<CycNum> proportionality_factor(const Vector &u, const Vector &v) {
  if (u.size() != v.size())
    return std::nullopt;
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero())
    ++k;
  if (k == v.size())
    return std::nullopt;
  if (u[k].is_zero())
    return std::nullopt;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] * v[k] != u[k] * v[i])
      return std::nullopt;
  return u[k] / v[k];
}

bool proportional(const Vector &u, const Vector &v) { return proportionality_factor(u, v).has_value(); }

std::vector<std::size_t> row_reduce(Matrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero())
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    const CycNum inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero())
        m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero())
        continue;
      const CycNum f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero())
          m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::size_t rank_of_vectors(const std::vector<Vector> &vectors) {
  if (vectors.empty())
    return 0;
  return rank(Matrix::from_rows(vectors));
}

CycNum determinant(Matrix m) {
  if (!m.is_square())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  CycNum det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero())
      ++p;
    if (p == n)
      return CycNum(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const CycNum inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero())
        continue;
      const CycNum f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero())
          m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix &m) {
  if (!m.is_square())
    throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw DivisionByZero("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vector> null_space(const Matrix &m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix &a, const Vector &b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    return std::nullopt;
  if (pivots.size() != a.cols())
    return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::string vector_to_string(const Vector &v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

} // namespace reflwb
