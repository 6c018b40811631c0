#pragma once

#include "ainfty/dga.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ainfty {

/// Vertex-ordered abstract simplicial complex. Each simplex is a strictly
/// increasing list of vertex indices.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::size_t>> simplices;

  /// Sorts each simplex, adds every face, dedups, and orders the result by
  /// dimension then lexicographically.
  static SimplicialComplex closure(std::vector<std::string> vertices,
                                   const std::vector<std::vector<std::size_t>>& generators);

  int dimension() const;
  std::size_t count(int dim) const;
  /// Vertex labels joined with '.'.
  std::string simplex_label(const std::vector<std::size_t>& simplex) const;
};

/// Throws InvalidComplex when a simplex has a missing face, repeated or
/// out-of-range vertices, or the complex is empty.
void check_complex(const SimplicialComplex& k);

/// Simplicial cochains with the Alexander-Whitney cup product, the
/// alternating-sign coboundary, the sum of vertex duals as unit, and the
/// identity Gram matrix. Throws InvalidComplex.
DGA simplicial_cochain_dga(const SimplicialComplex& k);

/// Lie algebra on e_1..e_n (stored 0-based) by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k for i < j.
struct LieStructure {
  std::size_t dim = 0;
  std::map<std::array<std::size_t, 3>, Rational> brackets;  // {i, j, k} with i < j

  Rational c(std::size_t i, std::size_t j, std::size_t k) const;
  /// Coefficient vector of [e_i, e_j] for any i, j.
  Vector bracket(std::size_t i, std::size_t j) const;
};

/// Throws JacobiFailure with the first violating triple.
void check_jacobi(const LieStructure& g);

/// Exterior algebra on the dual generators with
/// d xi^k = -sum_{i<j} c(i, j, k) xi^i ^ xi^j. Monomials are labelled
/// "1", "e1", "e1^e2", ... With check_jacobi = false the algebra is built
/// regardless, so d^2 may fail to vanish.
DGA chevalley_eilenberg_dga(const LieStructure& g, bool check_jacobi = true);

}  // namespace ainfty
