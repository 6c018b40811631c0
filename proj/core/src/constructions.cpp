#include "ainfty/constructions.hpp"

#include "ainfty/errors.hpp"

#include <algorithm>
#include <set>

namespace ainfty {

SimplicialComplex SimplicialComplex::closure(std::vector<std::string> vertices,
                                             const std::vector<std::vector<std::size_t>>& generators) {
  std::set<std::vector<std::size_t>> all;
  for (std::size_t v = 0; v < vertices.size(); ++v) all.insert({v});
  for (auto s : generators) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.empty())
      throw InvalidComplex("simplex with repeated or no vertices", {});
    if (s.back() >= vertices.size()) throw InvalidComplex("simplex vertex out of range", {});
    // every nonempty subset is a face
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b)) face.push_back(s[b]);
      all.insert(std::move(face));
    }
  }
  SimplicialComplex k;
  k.vertices = std::move(vertices);
  k.simplices.assign(all.begin(), all.end());
  std::stable_sort(k.simplices.begin(), k.simplices.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return k;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::size_t SimplicialComplex::count(int dim) const {
  return static_cast<std::size_t>(std::count_if(simplices.begin(), simplices.end(), [dim](const auto& s) {
    return static_cast<int>(s.size()) == dim + 1;
  }));
}

std::string SimplicialComplex::simplex_label(const std::vector<std::size_t>& simplex) const {
  std::string out;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (i) out += '.';
    out += vertices.at(simplex[i]);
  }
  return out;
}

namespace {

std::string simplex_witness(const SimplicialComplex& k, const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i] < k.vertices.size() ? k.vertices[s[i]] : std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

void check_complex(const SimplicialComplex& k) {
  if (k.vertices.empty() || k.simplices.empty()) throw InvalidComplex("empty simplicial complex", {});
  std::set<std::vector<std::size_t>> listed;
  for (const auto& s : k.simplices) {
    if (s.empty()) throw InvalidComplex("empty simplex", {});
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= k.vertices.size()) throw InvalidComplex("simplex vertex out of range", simplex_witness(k, s));
      if (i > 0 && s[i - 1] >= s[i])
        throw InvalidComplex("simplex vertices not strictly increasing", simplex_witness(k, s));
    }
    if (!listed.insert(s).second) throw InvalidComplex("simplex listed twice", simplex_witness(k, s));
  }
  for (const auto& s : k.simplices) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<std::size_t> face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!listed.count(face))
        throw InvalidComplex("complex is not closed under faces", simplex_witness(k, face) + " of " + simplex_witness(k, s));
    }
  }
  std::set<std::size_t> used;
  for (const auto& s : k.simplices)
    if (s.size() == 1) used.insert(s[0]);
  if (used.size() != k.vertices.size()) throw InvalidComplex("vertex without a 0-simplex", {});
}

DGA simplicial_cochain_dga(const SimplicialComplex& k) {
  check_complex(k);
  const int top = k.dimension();
  std::vector<std::vector<std::vector<std::size_t>>> by_dim(static_cast<std::size_t>(top + 1));
  for (const auto& s : k.simplices) by_dim[s.size() - 1].push_back(s);

  std::vector<std::vector<std::string>> labels(by_dim.size());
  std::map<std::vector<std::size_t>, std::size_t> local;  // simplex -> position within its degree
  for (std::size_t p = 0; p < by_dim.size(); ++p)
    for (std::size_t i = 0; i < by_dim[p].size(); ++i) {
      labels[p].push_back(k.simplex_label(by_dim[p][i]));
      local[by_dim[p][i]] = i;
    }

  DGA dga;
  dga.space = GradedVectorSpace(std::move(labels));
  const auto& space = dga.space;

  dga.diff = GradedMap::zero(space, 1);
  for (int p = 0; p < top; ++p) {
    Matrix block(space.dim(p + 1), space.dim(p));
    for (std::size_t t = 0; t < by_dim[static_cast<std::size_t>(p + 1)].size(); ++t) {
      const auto& tau = by_dim[static_cast<std::size_t>(p + 1)][t];
      for (std::size_t i = 0; i < tau.size(); ++i) {
        std::vector<std::size_t> face = tau;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        block(t, local.at(face)) += (i % 2 == 0) ? 1 : -1;
      }
    }
    dga.diff.set_block(p, std::move(block));
  }

  // (a cup b)(rho) = a(front p-face) * b(back q-face)
  dga.product = ProductTable(space.total_dim());
  std::vector<Element> products(space.total_dim() * space.total_dim());
  for (std::size_t r = 0; r < by_dim.size(); ++r)
    for (const auto& rho : by_dim[r]) {
      const std::size_t rho_idx = space.global_index(static_cast<int>(r), local.at(rho));
      for (std::size_t p = 0; p <= r; ++p) {
        const std::vector<std::size_t> front(rho.begin(), rho.begin() + static_cast<std::ptrdiff_t>(p + 1));
        const std::vector<std::size_t> back(rho.begin() + static_cast<std::ptrdiff_t>(p), rho.end());
        const std::size_t f = space.global_index(static_cast<int>(p), local.at(front));
        const std::size_t b = space.global_index(static_cast<int>(r - p), local.at(back));
        Element& slot = products[f * space.total_dim() + b];
        if (slot.size() == 0) slot = Element(space.total_dim());
        slot[rho_idx] += 1;
      }
    }
  for (std::size_t f = 0; f < space.total_dim(); ++f)
    for (std::size_t b = 0; b < space.total_dim(); ++b) {
      const Element& e = products[f * space.total_dim() + b];
      if (e.size() != 0) dga.product.set(f, b, e);
    }

  Element unit(space.total_dim());
  for (std::size_t v = 0; v < space.dim(0); ++v) unit[v] = 1;
  dga.unit = std::move(unit);
  dga.form = GradedBilinearForm::identity(space);
  return dga;
}

Rational LieStructure::c(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = brackets.find({i, j, k});
  return it == brackets.end() ? Rational(0) : it->second;
}

Vector LieStructure::bracket(std::size_t i, std::size_t j) const {
  Vector v(dim);
  if (i == j) return v;
  const bool swapped = i > j;
  const std::size_t a = swapped ? j : i;
  const std::size_t b = swapped ? i : j;
  for (std::size_t k = 0; k < dim; ++k) v[k] = swapped ? -c(a, b, k) : c(a, b, k);
  return v;
}

void check_jacobi(const LieStructure& g) {
  for (const auto& [key, value] : g.brackets) {
    if (key[0] >= key[1] || key[1] >= g.dim || key[2] >= g.dim)
      throw JacobiFailure("bracket index out of range or not i < j",
                          "(" + std::to_string(key[0] + 1) + "," + std::to_string(key[1] + 1) + ")");
  }
  // [[x,y],z] + [[y,z],x] + [[z,x],y]
  auto double_bracket = [&g](std::size_t x, std::size_t y, std::size_t z) {
    const Vector xy = g.bracket(x, y);
    Vector out(g.dim);
    for (std::size_t m = 0; m < g.dim; ++m)
      if (sgn(xy[m]) != 0) axpy(out, xy[m], g.bracket(m, z));
    return out;
  };
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j)
      for (std::size_t k = j + 1; k < g.dim; ++k) {
        const Vector sum = double_bracket(i, j, k) + double_bracket(j, k, i) + double_bracket(k, i, j);
        if (!is_zero(sum))
          throw JacobiFailure("Jacobi identity fails", "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                                                           ", e" + std::to_string(k + 1) + ")");
      }
}

namespace {

std::string monomial_label(const std::vector<std::size_t>& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += '^';
    out += "e" + std::to_string(m[i] + 1);
  }
  return out;
}

}  // namespace

DGA chevalley_eilenberg_dga(const LieStructure& g, bool check) {
  if (check) check_jacobi(g);
  const std::size_t n = g.dim;
  if (n > 20) throw std::invalid_argument("Lie algebra dimension too large for the exterior algebra");

  // Monomials as sorted index lists, ordered by degree then lexicographically.
  std::vector<std::vector<std::vector<std::size_t>>> monomials(n + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> m;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) m.push_back(b);
    monomials[m.size()].push_back(std::move(m));
  }
  std::vector<std::vector<std::string>> labels(n + 1);
  std::map<std::vector<std::size_t>, std::size_t> global;
  std::size_t next = 0;
  for (auto& level : monomials) {
    std::sort(level.begin(), level.end());
    for (const auto& m : level) {
      labels[m.size()].push_back(monomial_label(m));
      global[m] = next++;
    }
  }

  DGA dga;
  dga.space = GradedVectorSpace(std::move(labels));
  const auto& space = dga.space;
  const std::size_t dim = space.total_dim();

  dga.product = ProductTable(dim);
  for (const auto& [a, ia] : global)
    for (const auto& [b, ib] : global) {
      if (a.size() + b.size() > n) continue;
      if (std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end()) continue;
      // sign of the sorting permutation: count inversions
      std::size_t inversions = 0;
      for (auto x : a)
        for (auto y : b)
          if (x > y) ++inversions;
      std::vector<std::size_t> merged = a;
      merged.insert(merged.end(), b.begin(), b.end());
      std::sort(merged.begin(), merged.end());
      dga.product.set(ia, ib, Element::basis(dim, global.at(merged), inversions % 2 == 0 ? 1 : -1));
    }

  // Differential on generators, then extended as a derivation:
  // d(x1 ^ ... ^ xp) = sum_r (-1)^r x1 ^ .. ^ d(x_r) ^ .. ^ xp.
  std::vector<Element> d_gen(n, Element(dim));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational c = g.c(i, j, k);
        if (sgn(c) != 0) d_gen[k][global.at({i, j})] -= c;
      }

  dga.diff = GradedMap::zero(space, 1);
  std::vector<Matrix> blocks;
  for (int p = 0; p <= space.top(); ++p) blocks.emplace_back(space.dim(p + 1), space.dim(p));
  for (const auto& [m, idx] : global) {
    Element dm(dim);
    for (std::size_t r = 0; r < m.size(); ++r) {
      Element left = Element::basis(dim, global.at(std::vector<std::size_t>(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(r))));
      Element right = Element::basis(
          dim, global.at(std::vector<std::size_t>(m.begin() + static_cast<std::ptrdiff_t>(r + 1), m.end())));
      const Element term = dga.product.multiply(dga.product.multiply(left, d_gen[m[r]]), right);
      dm.add_scaled(r % 2 == 0 ? 1 : -1, term);
    }
    const int p = static_cast<int>(m.size());
    if (p + 1 > space.top()) continue;
    const Vector local = block_of(space, dm, p + 1);
    const std::size_t col = idx - space.offset(p);
    for (std::size_t row = 0; row < local.size(); ++row) blocks[static_cast<std::size_t>(p)](row, col) = local[row];
  }
  for (int p = 0; p <= space.top(); ++p) dga.diff.set_block(p, std::move(blocks[static_cast<std::size_t>(p)]));

  dga.unit = Element::basis(dim, 0);
  dga.form = GradedBilinearForm::identity(space);
  return dga;
}

}  // namespace ainfty
