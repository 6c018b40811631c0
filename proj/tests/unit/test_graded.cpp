#include "ainfty/errors.hpp"
#include "ainfty/graded.hpp"

#include <doctest.h>

using namespace ainfty;

namespace {

GradedVectorSpace interval_space() { return GradedVectorSpace({{"v0", "v1"}, {"v0.v1"}}); }

GradedMap interval_coboundary(const GradedVectorSpace& space) {
  GradedMap d = GradedMap::zero(space, 1);
  Matrix m(1, 2);
  m(0, 0) = -1;
  m(0, 1) = 1;
  d.set_block(0, m);
  return d;
}

}  // namespace

TEST_CASE("global indexing is degree-major") {
  const GradedVectorSpace s({{"1"}, {"x", "y", "z"}, {"xy"}});
  CHECK(s.top() == 2);
  CHECK(s.total_dim() == 5);
  CHECK(s.offset(1) == 1);
  CHECK(s.offset(2) == 4);
  CHECK(s.global_index(1, 2) == 3);
  CHECK(s.degree_of(3) == 1);
  CHECK(s.label(4) == "xy");
  CHECK(s.index_of("z") == 3u);
  CHECK_FALSE(s.index_of("w").has_value());
  CHECK(s.dim(5) == 0);
  CHECK(s.dims() == std::vector<std::size_t>{1, 3, 1});
  CHECK_THROWS_AS(GradedVectorSpace({{"a"}, {"a"}}), std::invalid_argument);
}

TEST_CASE("elements: homogeneity, blocks, formatting") {
  const GradedVectorSpace s({{"1"}, {"x", "y"}, {"xy"}});
  Element e = element_from_label(s, "x", Rational(1, 2));
  e.add_scaled(-1, element_from_label(s, "y"));
  CHECK(homogeneous_degree(s, e) == 1);
  CHECK(format_element(s, e) == "1/2 x - y");
  CHECK(format_element(s, Element(s.total_dim())) == "0");
  CHECK(format_element(s, -element_from_label(s, "xy")) == "-xy");
  CHECK(block_of(s, e, 1) == Vector{Rational(1, 2), -1});
  CHECK(from_block(s, 1, Vector{Rational(1, 2), -1}) == e);

  const Element mixed = e + element_from_label(s, "1");
  CHECK_FALSE(homogeneous_degree(s, mixed).has_value());
  const auto parts = homogeneous_parts(s, mixed);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 0);
  CHECK(parts[1].second == e);
  CHECK_FALSE(homogeneous_degree(s, Element(s.total_dim())).has_value());
}

TEST_CASE("graded maps: d^2 = 0 on the interval, identity, composition") {
  const auto s = interval_space();
  const GradedMap d = interval_coboundary(s);
  CHECK(compose(d, d).is_zero());
  CHECK(compose(d, d).shift() == 2);
  const GradedMap id = GradedMap::identity(s);
  CHECK(compose(id, d) == d);
  CHECK(compose(d, id) == d);
  CHECK(d.apply(s, element_from_label(s, "v0")) == -element_from_label(s, "v0.v1"));
  CHECK(d.apply_basis(s, 1) == element_from_label(s, "v0.v1"));
  CHECK((d - d).is_zero());
  CHECK(d.scaled(2) == d + d);
  CHECK_THROWS_AS(GradedMap::zero(s, 1).set_block(0, Matrix(2, 2)), std::invalid_argument);
}

TEST_CASE("kernel and image bases on the interval") {
  const auto s = interval_space();
  const GradedMap d = interval_coboundary(s);
  const auto ker = kernel_basis(s, d, 0);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == element_from_label(s, "v0") + element_from_label(s, "v1"));
  CHECK(kernel_basis(s, d, 1).size() == 1);
  const auto img = image_basis(s, d, 0);
  REQUIRE(img.size() == 1);
  CHECK(img[0] == element_from_label(s, "v0.v1"));
  CHECK(image_basis(s, d, 1).empty());
}

TEST_CASE("orthogonal projection onto span(v0 + v1)") {
  const auto s = interval_space();
  const GradedBilinearForm g = GradedBilinearForm::identity(s);
  const Element u = element_from_label(s, "v0") + element_from_label(s, "v1");
  const GradedMap p = orthogonal_projection(s, {u}, g);
  CHECK(p.apply(s, element_from_label(s, "v0")) == Rational(1, 2) * u);
  CHECK(compose(p, p) == p);
  CHECK(p.apply(s, element_from_label(s, "v0.v1")).is_zero());
  CHECK_THROWS_AS(orthogonal_projection(s, {u, Rational(2) * u}, g), DependentInput);

  // A non-identity Gram matrix changes the projection.
  Matrix g0(2, 2);
  g0(0, 0) = 2;
  g0(1, 1) = 1;
  const GradedBilinearForm skew({g0, Matrix::identity(1)});
  const GradedMap q = orthogonal_projection(s, {u}, skew);
  CHECK(q.apply(s, element_from_label(s, "v0")) == Rational(2, 3) * u);
}

TEST_CASE("bilinear forms") {
  const auto s = interval_space();
  Matrix bad(2, 2);
  bad(0, 1) = 1;
  bad(1, 0) = 1;
  CHECK_THROWS_AS(GradedBilinearForm({bad, Matrix::identity(1)}), ValidationError);
  const GradedBilinearForm g = GradedBilinearForm::identity(s);
  CHECK(g.is_identity());
  const Element a = element_from_label(s, "v0") + element_from_label(s, "v1");
  CHECK(g.pair(s, a, a) == 2);
  CHECK(g.pair(s, a, element_from_label(s, "v0.v1")) == 0);
}

TEST_CASE("solve_in_subspace: 2 x = e on span(e)") {
  const GradedVectorSpace s({{"e"}});
  GradedMap a = GradedMap::zero(s, 0);
  Matrix two(1, 1);
  two(0, 0) = 2;
  a.set_block(0, two);
  const Element e = element_from_label(s, "e");
  CHECK(solve_in_subspace(s, a, e, {e}) == Rational(1, 2) * e);
  CHECK_THROWS_AS(solve_in_subspace(s, GradedMap::zero(s, 0), e, {e}), NoSolution);
  CHECK_THROWS_AS(solve_in_subspace(s, GradedMap::zero(s, 0), Element(1), {e}), NonUnique);
}
