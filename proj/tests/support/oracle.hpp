#pragma once

// Reference computations for the tests. Deliberately independent of the
// library: plain Gaussian elimination on nested vectors and face
// enumeration by bitmask.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

/// Rank by elimination with the first nonzero entry below the current row as pivot.
inline std::size_t rank(Mat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Betti numbers of the simplicial cochain complex generated by the given
/// maximal simplices (vertex ids), computed from bitmask faces.
inline std::vector<std::size_t> simplicial_betti(const std::vector<std::vector<int>>& maximal) {
  std::vector<std::vector<unsigned>> faces;  // by dimension, as vertex bitmasks
  std::vector<unsigned> all;
  for (const auto& s : maximal) {
    unsigned mask = 0;
    for (int v : s) mask |= 1u << v;
    for (unsigned sub = mask; sub; sub = (sub - 1) & mask) all.push_back(sub);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (unsigned f : all) {
    const auto dim = static_cast<std::size_t>(__builtin_popcount(f)) - 1;
    if (faces.size() <= dim) faces.resize(dim + 1);
    faces[dim].push_back(f);
  }
  // coboundary C^n -> C^{n+1}: entry for (tau, sigma) is (-1)^i when sigma is tau minus its i-th vertex
  auto coboundary_rank = [&](std::size_t n) -> std::size_t {
    if (n + 1 >= faces.size()) return 0;
    std::map<unsigned, std::size_t> col;
    for (std::size_t j = 0; j < faces[n].size(); ++j) col[faces[n][j]] = j;
    Mat m(faces[n + 1].size(), std::vector<Q>(faces[n].size()));
    for (std::size_t r = 0; r < faces[n + 1].size(); ++r) {
      const unsigned tau = faces[n + 1][r];
      int i = 0;
      for (int v = 0; v < 32; ++v) {
        if (!(tau & (1u << v))) continue;
        m[r][col.at(tau & ~(1u << v))] = (i % 2 == 0) ? 1 : -1;
        ++i;
      }
    }
    return rank(m);
  };
  std::vector<std::size_t> betti;
  for (std::size_t n = 0; n < faces.size(); ++n) {
    const std::size_t in = n > 0 ? coboundary_rank(n - 1) : 0;
    betti.push_back(faces[n].size() - coboundary_rank(n) - in);
  }
  return betti;
}

/// Faces of each dimension, as counts.
inline std::vector<std::size_t> face_counts(const std::vector<std::vector<int>>& maximal) {
  std::vector<unsigned> all;
  for (const auto& s : maximal) {
    unsigned mask = 0;
    for (int v : s) mask |= 1u << v;
    for (unsigned sub = mask; sub; sub = (sub - 1) & mask) all.push_back(sub);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::size_t> counts;
  for (unsigned f : all) {
    const auto dim = static_cast<std::size_t>(__builtin_popcount(f)) - 1;
    if (counts.size() <= dim) counts.resize(dim + 1);
    ++counts[dim];
  }
  return counts;
}

/// Maximal simplices of the corpus complexes, rebuilt by hand.
inline std::vector<std::vector<int>> interval() { return {{0, 1}}; }
inline std::vector<std::vector<int>> circle() { return {{0, 1}, {1, 2}, {0, 2}}; }
inline std::vector<std::vector<int>> sphere2() { return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}; }
inline std::vector<std::vector<int>> torus() {
  std::vector<std::vector<int>> t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int a = 3 * i + j;
      const int b = 3 * ((i + 1) % 3) + j;
      const int c = 3 * ((i + 1) % 3) + (j + 1) % 3;
      const int d = 3 * i + (j + 1) % 3;
      t.push_back({a, b, c});
      t.push_back({a, d, c});
    }
  return t;
}

/// Betti numbers of the exterior algebra on n generators with zero
/// differential: binomial coefficients.
inline std::vector<std::size_t> exterior_betti(std::size_t n) {
  std::vector<std::size_t> b{1};
  for (std::size_t k = 1; k <= n; ++k) b.push_back(b.back() * (n - k + 1) / k);
  return b;
}

}  // namespace oracle
