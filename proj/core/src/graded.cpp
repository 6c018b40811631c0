#include "ainfty/graded.hpp"

#include "ainfty/errors.hpp"

#include <map>
#include <stdexcept>

namespace ainfty {

GradedVectorSpace::GradedVectorSpace(std::vector<std::vector<std::string>> basis) : basis_(std::move(basis)) {
  std::size_t off = 0;
  for (std::size_t n = 0; n < basis_.size(); ++n) {
    offsets_.push_back(off);
    for (const auto& l : basis_[n]) {
      if (!index_.emplace(l, labels_.size()).second) throw std::invalid_argument("duplicate basis label '" + l + "'");
      labels_.push_back(l);
      degrees_.push_back(static_cast<int>(n));
    }
    off += basis_[n].size();
  }
}

std::size_t GradedVectorSpace::dim(int n) const {
  if (n < 0 || n > top()) return 0;
  return basis_[static_cast<std::size_t>(n)].size();
}

std::size_t GradedVectorSpace::offset(int n) const {
  if (n < 0) return 0;
  if (n > top()) return labels_.size();
  return offsets_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> GradedVectorSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> GradedVectorSpace::dims() const {
  std::vector<std::size_t> d;
  for (const auto& b : basis_) d.push_back(b.size());
  return d;
}

Element Element::basis(std::size_t dim, std::size_t index, const Rational& c) {
  Element e(dim);
  e.coeffs_.at(index) = c;
  return e;
}

Element& Element::operator+=(const Element& o) {
  if (o.size() != size()) throw std::invalid_argument("element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.size() != size()) throw std::invalid_argument("element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

void Element::add_scaled(const Rational& s, const Element& o) {
  if (o.size() != size()) throw std::invalid_argument("element size mismatch");
  axpy(coeffs_, s, o.coeffs_);
}

std::optional<int> homogeneous_degree(const GradedVectorSpace& space, const Element& e) {
  std::optional<int> deg;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (sgn(e[i]) == 0) continue;
    const int d = space.degree_of(i);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::vector<std::pair<int, Element>> homogeneous_parts(const GradedVectorSpace& space, const Element& e) {
  std::vector<std::pair<int, Element>> parts;
  for (int n = 0; n <= space.top(); ++n) {
    Element part(e.size());
    bool nonzero = false;
    for (std::size_t i = space.offset(n); i < space.offset(n) + space.dim(n); ++i) {
      if (sgn(e[i]) == 0) continue;
      part[i] = e[i];
      nonzero = true;
    }
    if (nonzero) parts.emplace_back(n, std::move(part));
  }
  return parts;
}

Vector block_of(const GradedVectorSpace& space, const Element& e, int n) {
  Vector v(space.dim(n));
  const std::size_t off = space.offset(n);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = e[off + i];
  return v;
}

Element from_block(const GradedVectorSpace& space, int n, const Vector& local) {
  if (local.size() != space.dim(n)) throw std::invalid_argument("block length mismatch");
  Element e(space.total_dim());
  const std::size_t off = space.offset(n);
  for (std::size_t i = 0; i < local.size(); ++i) e[off + i] = local[i];
  return e;
}

Element element_from_label(const GradedVectorSpace& space, const std::string& label, const Rational& c) {
  auto idx = space.index_of(label);
  if (!idx) throw std::invalid_argument("unknown basis label '" + label + "'");
  return Element::basis(space.total_dim(), *idx, c);
}

std::string format_element(const GradedVectorSpace& space, const Element& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Rational& c = e[i];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + " ";
    out += space.label(i);
  }
  return out.empty() ? "0" : out;
}

GradedMap GradedMap::zero(const GradedVectorSpace& space, int shift) { return with_dims(space.dims(), shift); }

GradedMap GradedMap::identity(const GradedVectorSpace& space) {
  GradedMap m = zero(space, 0);
  for (int n = 0; n <= space.top(); ++n) m.blocks_[static_cast<std::size_t>(n)] = Matrix::identity(space.dim(n));
  return m;
}

std::size_t GradedMap::target_dim(int n) const {
  const int t = n + shift_;
  if (t < 0 || t > top()) return 0;
  return dims_[static_cast<std::size_t>(t)];
}

void GradedMap::set_block(int n, Matrix m) {
  if (n < 0 || n > top()) throw std::invalid_argument("block degree out of range");
  if (m.rows() != target_dim(n) || m.cols() != dims_[static_cast<std::size_t>(n)])
    throw std::invalid_argument("block shape mismatch at degree " + std::to_string(n));
  blocks_[static_cast<std::size_t>(n)] = std::move(m);
}

Element GradedMap::apply(const GradedVectorSpace& space, const Element& e) const {
  Element out(space.total_dim());
  for (int n = 0; n <= top(); ++n) {
    const Matrix& b = block(n);
    if (b.empty()) continue;
    const Vector v = block_of(space, e, n);
    if (ainfty::is_zero(v)) continue;
    const Vector w = b * v;
    const std::size_t off = space.offset(n + shift_);
    for (std::size_t i = 0; i < w.size(); ++i) out[off + i] += w[i];
  }
  return out;
}

Element GradedMap::apply_basis(const GradedVectorSpace& space, std::size_t global) const {
  return apply(space, Element::basis(space.total_dim(), global));
}

bool GradedMap::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  if (shift_ != o.shift_ || dims_ != o.dims_) throw std::invalid_argument("graded map sum mismatch");
  GradedMap out = *this;
  for (std::size_t n = 0; n < blocks_.size(); ++n) out.blocks_[n] += o.blocks_[n];
  return out;
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
  if (shift_ != o.shift_ || dims_ != o.dims_) throw std::invalid_argument("graded map difference mismatch");
  GradedMap out = *this;
  for (std::size_t n = 0; n < blocks_.size(); ++n) out.blocks_[n] -= o.blocks_[n];
  return out;
}

GradedMap GradedMap::scaled(const Rational& s) const {
  GradedMap out = *this;
  for (auto& b : out.blocks_) b = b.scaled(s);
  return out;
}

GradedMap GradedMap::with_dims(std::vector<std::size_t> dims, int shift) {
  GradedMap m;
  m.shift_ = shift;
  m.dims_ = std::move(dims);
  for (int n = 0; n <= m.top(); ++n) m.blocks_.emplace_back(m.target_dim(n), m.dims_[static_cast<std::size_t>(n)]);
  return m;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (f.dims_ != g.dims_) throw std::invalid_argument("composition of maps on different spaces");
  GradedMap out = GradedMap::with_dims(g.dims_, f.shift() + g.shift());
  for (int n = 0; n <= g.top(); ++n) {
    const int mid = n + g.shift();
    if (mid < 0 || mid > f.top()) continue;
    out.set_block(n, f.block(mid) * g.block(n));
  }
  return out;
}

GradedBilinearForm::GradedBilinearForm(std::vector<Matrix> gram) : gram_(std::move(gram)) {
  for (std::size_t n = 0; n < gram_.size(); ++n) {
    const Matrix& g = gram_[n];
    if (g.rows() != g.cols()) throw ValidationError("Gram matrix is not square", "degree " + std::to_string(n));
    if (!g.is_symmetric()) throw ValidationError("Gram matrix is not symmetric", "degree " + std::to_string(n));
    if (!is_positive_definite(g)) throw ValidationError("Gram matrix is not positive definite", "degree " + std::to_string(n));
  }
}

GradedBilinearForm GradedBilinearForm::identity(const GradedVectorSpace& space) {
  std::vector<Matrix> g;
  for (int n = 0; n <= space.top(); ++n) g.push_back(Matrix::identity(space.dim(n)));
  return GradedBilinearForm(std::move(g));
}

bool GradedBilinearForm::is_identity() const {
  for (const auto& g : gram_)
    if (!(g == Matrix::identity(g.rows()))) return false;
  return true;
}

Rational GradedBilinearForm::pair(const GradedVectorSpace& space, const Element& a, const Element& b) const {
  Rational total = 0;
  for (int n = 0; n <= space.top(); ++n) {
    const Vector va = block_of(space, a, n);
    if (ainfty::is_zero(va)) continue;
    const Vector gb = gram(n) * block_of(space, b, n);
    for (std::size_t i = 0; i < va.size(); ++i) total += va[i] * gb[i];
  }
  return total;
}

std::vector<Element> kernel_basis(const GradedVectorSpace& space, const GradedMap& m, int n) {
  std::vector<Element> out;
  if (n < 0 || n > space.top()) return out;
  const Matrix& b = m.block(n);
  const Matrix k = b.rows() == 0 ? Matrix::identity(b.cols()) : kernel(b);
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(from_block(space, n, k.column(j)));
  return out;
}

std::vector<Element> image_basis(const GradedVectorSpace& space, const GradedMap& m, int n) {
  std::vector<Element> out;
  if (n < 0 || n > space.top()) return out;
  const Matrix& b = m.block(n);
  if (b.empty()) return out;
  const Matrix img = column_space(b);
  for (std::size_t j = 0; j < img.cols(); ++j) out.push_back(from_block(space, n + m.shift(), img.column(j)));
  return out;
}

Element solve_in_subspace(const GradedVectorSpace& space, const GradedMap& a, const Element& rhs,
                          const std::vector<Element>& allowed) {
  if (a.shift() != 0) throw std::invalid_argument("solve_in_subspace needs a degree-0 map");
  std::vector<Vector> cols;
  cols.reserve(allowed.size());
  for (const auto& u : allowed) cols.push_back(a.apply(space, u).coeffs());
  const Matrix system = Matrix::from_columns(space.total_dim(), cols);
  const Vector c = solve_unique(system, rhs.coeffs());
  Element x(space.total_dim());
  for (std::size_t i = 0; i < allowed.size(); ++i) x.add_scaled(c[i], allowed[i]);
  return x;
}

GradedMap orthogonal_projection(const GradedVectorSpace& space, const std::vector<Element>& subspace,
                                const GradedBilinearForm& form) {
  std::map<int, std::vector<Vector>> by_degree;
  for (const auto& v : subspace) {
    auto deg = homogeneous_degree(space, v);
    if (!deg) {
      if (v.is_zero()) throw DependentInput("zero vector in projection subspace");
      throw std::invalid_argument("projection subspace vector is not homogeneous");
    }
    by_degree[*deg].push_back(block_of(space, v, *deg));
  }
  GradedMap p = GradedMap::zero(space, 0);
  for (const auto& [n, vecs] : by_degree) {
    const Matrix basis = Matrix::from_columns(space.dim(n), vecs);
    const Matrix bt_g = basis.transpose() * form.gram(n);
    const Matrix inner = bt_g * basis;
    p.set_block(n, basis * inverse(inner) * bt_g);
  }
  return p;
}

}  // namespace ainfty
