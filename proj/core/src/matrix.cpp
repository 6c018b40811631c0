#include "ainfty/matrix.hpp"

#include "ainfty/errors.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ainfty {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s;
  std::string_view den;
  if (slash != std::string::npos) {
    num = std::string_view(s).substr(0, slash);
    den = std::string_view(s).substr(slash + 1);
    if (!digits_ok(den, false)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  if (!digits_ok(num, true)) throw std::invalid_argument("bad numerator in '" + std::string(text) + "'");
  Rational q;
  q.get_num() = mpz_class(std::string(num));
  q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) != 0) out[i] += a * v[k];
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  out += rhs;
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  Matrix out = *this;
  out -= rhs;
  return out;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(cols, basis);
}

Matrix column_space(const Matrix& m) {
  const Echelon e = row_reduce(m.transpose());
  Matrix out(m.rows(), e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, r) = e.reduced(r, i);
  return out;
}

Vector solve_unique(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) throw NoSolution("right-hand side is not in the image");
  if (e.pivots.size() != a.cols()) throw NonUnique("system has a nontrivial kernel");
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw DependentInput("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

bool is_positive_definite(const Matrix& m) {
  if (!m.is_symmetric()) return false;
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
    if (sgn(determinant(std::move(lead))) <= 0) return false;
  }
  return true;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scaled(const Vector& v, const Rational& s) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

void axpy(Vector& v, const Rational& s, const Vector& w) {
  assert(v.size() == w.size());
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (sgn(w[i]) != 0) v[i] += s * w[i];
}

}  // namespace ainfty
