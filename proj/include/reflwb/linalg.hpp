#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflwb/cyclo.hpp"

namespace reflwb {

using Vector = std::vector<CycNum>;

/// Dense row-major matrix over cyclotomic numbers.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<CycNum> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector> &rows);
  static Matrix from_columns(const std::vector<Vector> &cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycNum &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycNum &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  const std::vector<CycNum> &data() const { return data_; }

  Matrix conj_transpose() const;
  Matrix transpose() const;
  CycNum trace() const;

  /// Lifts every entry to Q(zeta_order).
  Matrix lifted(int order) const;

  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Matrix operator+(const Matrix &a, const Matrix &b);
  friend Matrix operator-(const Matrix &a, const Matrix &b);
  Matrix scaled(const CycNum &c) const;

  friend bool operator==(const Matrix &a, const Matrix &b);
  friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

  std::size_t hash() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix &m) const { return m.hash(); }
};

Vector operator*(const Matrix &a, const Vector &v);
/// Row vector times matrix.
Vector operator*(const Vector &row, const Matrix &a);

CycNum dot(const Vector &a, const Vector &b);
Vector scaled(const Vector &v, const CycNum &c);
Vector conj(const Vector &v);
bool is_zero(const Vector &v);

/// Hermitian pairing conj(x)^T F y.
CycNum hermitian(const Matrix &form, const Vector &x, const Vector &y);

/// Scales v so its first nonzero coordinate is 1. v must be nonzero.
Vector normalize_first_nonzero(const Vector &v);
/// True iff u and v span the same line (both nonzero), via 2x2 minors.
bool proportional(const Vector &u, const Vector &v);
/// c with u = c v when proportional; nullopt otherwise.
std::optional<CycNum> proportionality_factor(const Vector &u, const Vector &v);

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix &m);
std::size_t rank(Matrix m);
std::size_t rank_of_vectors(const std::vector<Vector> &vectors);
CycNum determinant(Matrix m);
/// Inverse of a square matrix; throws DivisionByZero if singular.
Matrix inverse(const Matrix &m);
/// Basis of {x : m x = 0}.
std::vector<Vector> null_space(const Matrix &m);
/// Solves a x = b when a has full column rank and b is in its image.
std::optional<Vector> solve(const Matrix &a, const Vector &b);

std::string vector_to_string(const Vector &v);

} // namespace reflwb
