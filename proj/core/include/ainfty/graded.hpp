#pragma once

#include "ainfty/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ainfty {

/// A = A^0 + ... + A^top with a labelled basis per degree. Basis elements
/// carry a global index: degree-major, then position within the degree.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  /// Throws std::invalid_argument on duplicate labels.
  explicit GradedVectorSpace(std::vector<std::vector<std::string>> basis);

  int top() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t dim(int n) const;
  std::size_t total_dim() const { return labels_.size(); }
  std::size_t offset(int n) const;

  const std::vector<std::string>& labels(int n) const { return basis_.at(static_cast<std::size_t>(n)); }
  const std::string& label(std::size_t global) const { return labels_.at(global); }
  int degree_of(std::size_t global) const { return degrees_.at(global); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t global_index(int n, std::size_t local) const { return offset(n) + local; }

  std::vector<std::size_t> dims() const;

  friend bool operator==(const GradedVectorSpace& a, const GradedVectorSpace& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<std::vector<std::string>> basis_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Coefficient vector over the global basis of a graded space.
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t dim) : coeffs_(dim) {}
  explicit Element(Vector coeffs) : coeffs_(std::move(coeffs)) {}

  static Element basis(std::size_t dim, std::size_t index, const Rational& c = 1);

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const Vector& coeffs() const { return coeffs_; }

  bool is_zero() const { return ainfty::is_zero(coeffs_); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);
  /// this += s * o
  void add_scaled(const Rational& s, const Element& o);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend bool operator==(const Element& a, const Element& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Vector coeffs_;
};

/// Degree of a nonzero homogeneous element; nullopt for zero or mixed.
std::optional<int> homogeneous_degree(const GradedVectorSpace& space, const Element& e);

/// Nonzero homogeneous components, ascending degree.
std::vector<std::pair<int, Element>> homogeneous_parts(const GradedVectorSpace& space, const Element& e);

/// Local coordinates of the degree-n component.
Vector block_of(const GradedVectorSpace& space, const Element& e, int n);
Element from_block(const GradedVectorSpace& space, int n, const Vector& local);

Element element_from_label(const GradedVectorSpace& space, const std::string& label, const Rational& c = 1);

/// Terms as "c label", joined with " + " / " - "; "0" for the zero element.
std::string format_element(const GradedVectorSpace& space, const Element& e);

/// Linear map of fixed degree shift d, stored as one dim(n+d) x dim(n)
/// block per source degree n.
class GradedMap {
 public:
  GradedMap() = default;
  static GradedMap zero(const GradedVectorSpace& space, int shift);
  static GradedMap identity(const GradedVectorSpace& space);

  int shift() const { return shift_; }
  int top() const { return static_cast<int>(dims_.size()) - 1; }
  const Matrix& block(int n) const { return blocks_.at(static_cast<std::size_t>(n)); }
  /// Throws std::invalid_argument on a shape mismatch.
  void set_block(int n, Matrix m);

  Element apply(const GradedVectorSpace& space, const Element& e) const;
  /// Columns of the global matrix, one per basis element.
  Element apply_basis(const GradedVectorSpace& space, std::size_t global) const;

  bool is_zero() const;
  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap scaled(const Rational& s) const;

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.shift_ == b.shift_ && a.dims_ == b.dims_ && a.blocks_ == b.blocks_;
  }
  friend GradedMap compose(const GradedMap& f, const GradedMap& g);

 private:
  static GradedMap with_dims(std::vector<std::size_t> dims, int shift);
  std::size_t target_dim(int n) const;

  int shift_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> blocks_;
};

/// f o g
GradedMap compose(const GradedMap& f, const GradedMap& g);

/// Per-degree symmetric positive-definite Gram matrices.
class GradedBilinearForm {
 public:
  GradedBilinearForm() = default;
  /// Throws ValidationError naming the first bad degree.
  explicit GradedBilinearForm(std::vector<Matrix> gram);
  static GradedBilinearForm identity(const GradedVectorSpace& space);

  const Matrix& gram(int n) const { return gram_.at(static_cast<std::size_t>(n)); }
  std::size_t degrees() const { return gram_.size(); }
  bool is_identity() const;

  /// Different degrees are orthogonal.
  Rational pair(const GradedVectorSpace& space, const Element& a, const Element& b) const;

 private:
  std::vector<Matrix> gram_;
};

/// Bases of Ker and Img of the block with source degree n (canonical echelon
/// order); image vectors live in degree n + shift.
std::vector<Element> kernel_basis(const GradedVectorSpace& space, const GradedMap& m, int n);
std::vector<Element> image_basis(const GradedVectorSpace& space, const GradedMap& m, int n);

/// The unique x in span(allowed) with a(x) = rhs. `a` must have shift 0.
/// Throws NoSolution, or NonUnique if a is not injective on span(allowed).
Element solve_in_subspace(const GradedVectorSpace& space, const GradedMap& a, const Element& rhs,
                          const std::vector<Element>& allowed);

/// Orthogonal projection onto span(subspace) for the given form. Vectors must
/// be homogeneous; throws DependentInput if they are linearly dependent.
GradedMap orthogonal_projection(const GradedVectorSpace& space, const std::vector<Element>& subspace,
                                const GradedBilinearForm& form);

}  // namespace ainfty
