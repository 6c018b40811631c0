#pragma once

#include "ainfty/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ainfty {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix scaled(const Rational& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Pivots are chosen as the leftmost nonzero
/// column, scanning rows top-down, so the result is canonical.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Null-space basis as columns of a (cols x nullity) matrix: one vector per
/// free column, with 1 in that column.
Matrix kernel(const Matrix& m);

/// Column-space basis as columns of a (rows x rank) matrix, taken from the
/// reduced echelon form of the transpose.
Matrix column_space(const Matrix& m);

/// Unique solution x of a x = b. Throws NoSolution when inconsistent and
/// NonUnique when `a` has a nontrivial kernel.
Vector solve_unique(const Matrix& a, const Vector& b);

/// Throws DependentInput when singular.
Matrix inverse(const Matrix& m);

Rational determinant(Matrix m);

/// Sylvester's criterion on a symmetric matrix.
bool is_positive_definite(const Matrix& m);

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Rational& s);
/// v += s * w
void axpy(Vector& v, const Rational& s, const Vector& w);

}  // namespace ainfty
