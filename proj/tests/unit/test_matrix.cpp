#include "ainfty/errors.hpp"
#include "ainfty/matrix.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace ainfty;

namespace {

Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

oracle::Mat to_oracle(const Matrix& m) {
  oracle::Mat out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_weight) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> zero(0, 9);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (zero(rng) >= zero_weight) {
        m(i, j) = Rational(num(rng), den(rng));
        m(i, j).canonicalize();
      }
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("interval coboundary: kernel and column space") {
  const Matrix d = from_rows({{-1, 1}});
  const Matrix k = kernel(d);
  REQUIRE(k.cols() == 1);
  CHECK(k.column(0) == Vector{1, 1});
  const Matrix img = column_space(d);
  REQUIRE(img.cols() == 1);
  CHECK(img.column(0) == Vector{1});

  const Matrix dt = d.transpose();
  const Matrix img_t = column_space(dt);
  REQUIRE(img_t.cols() == 1);
  CHECK(img_t.column(0) == Vector{1, -1});  // canonical: leading entry 1
  CHECK(rank(dt) == 1);
}

TEST_CASE("laplacian blocks of the interval are M^T M and M M^T") {
  const Matrix m = from_rows({{-1, 1}});
  CHECK(m.transpose() * m == from_rows({{1, -1}, {-1, 1}}));
  CHECK(m * m.transpose() == from_rows({{2}}));
}

TEST_CASE("solve_unique") {
  CHECK(solve_unique(from_rows({{2}}), Vector{1}) == Vector{Rational(1, 2)});
  CHECK_THROWS_AS(solve_unique(from_rows({{1, 1}}), Vector{1}), NonUnique);
  CHECK_THROWS_AS(solve_unique(from_rows({{1}, {1}}), Vector{1, 2}), NoSolution);
  CHECK(solve_unique(from_rows({{1}, {1}}), Vector{3, 3}) == Vector{3});
}

TEST_CASE("inverse, determinant, definiteness") {
  const Matrix a = from_rows({{2, 1}, {1, 1}});
  CHECK(inverse(a) == from_rows({{1, -1}, {-1, 2}}));
  CHECK(determinant(a) == 1);
  CHECK(is_positive_definite(a));
  CHECK_FALSE(is_positive_definite(from_rows({{1, 2}, {2, 1}})));
  CHECK_FALSE(is_positive_definite(from_rows({{0}})));
  CHECK_THROWS_AS(inverse(from_rows({{1, 2}, {2, 4}})), DependentInput);
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("echelon form is canonical under row operations") {
  const Matrix a = from_rows({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
  Matrix b = a;
  for (std::size_t j = 0; j < 3; ++j) {
    std::swap(b(0, j), b(2, j));
    b(1, j) += 3 * b(0, j);
  }
  CHECK(row_reduce(a).reduced == row_reduce(b).reduced);
  CHECK(row_reduce(a).pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("random matrices agree with the reference rank; kernels and inverses check out") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    const Matrix m = random_matrix(rng, rows, cols, static_cast<int>(rng() % 8));
    const std::size_t r = rank(m);
    CHECK(r == oracle::rank(to_oracle(m)));
    const Matrix k = kernel(m);
    CHECK(k.cols() == cols - r);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
    CHECK(column_space(m).cols() == r);
    CHECK(rank(m.transpose()) == r);
    if (rows == cols && r == rows) {
      CHECK(inverse(m) * m == Matrix::identity(rows));
      CHECK(determinant(m) != 0);
    }
  }
}
