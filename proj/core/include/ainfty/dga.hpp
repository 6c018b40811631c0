#pragma once

#include "ainfty/graded.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ainfty {

/// Sparse linear combination of basis indices.
using SparseTerms = std::vector<std::pair<std::size_t, Rational>>;

/// Structure constants of a bilinear product: basis pair -> sparse result.
class ProductTable {
 public:
  ProductTable() = default;
  explicit ProductTable(std::size_t dim) : dim_(dim), table_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  void set(std::size_t left, std::size_t right, const Element& result);
  const SparseTerms& terms(std::size_t left, std::size_t right) const { return table_[left * dim_ + right]; }
  Element get(std::size_t left, std::size_t right) const;

  /// Bilinear extension.
  Element multiply(const Element& a, const Element& b) const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseTerms> table_;
};

/// Finite-dimensional differential graded algebra with an inner product.
/// Graded commutativity is not assumed.
struct DGA {
  GradedVectorSpace space;
  GradedMap diff;  // shift +1
  ProductTable product;
  std::optional<Element> unit;  // degree 0; need not be a basis element
  GradedBilinearForm form;

  std::size_t dim() const { return space.total_dim(); }
  Element basis(std::size_t i) const { return Element::basis(dim(), i); }
  Element d(const Element& e) const { return diff.apply(space, e); }
};

Element multiply(const DGA& dga, const Element& a, const Element& b);

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::string witness;  // basis tuple, empty on pass
};

struct ValidationReport {
  std::vector<AxiomResult> axioms;

  bool passed() const;
  const AxiomResult* first_failure() const;
};

/// Checks the differential degree, d^2 = 0, degree additivity,
/// associativity, the graded Leibniz rule, unit laws and the Gram matrices.
/// Failures are reported with a witness, never thrown.
ValidationReport validate_dga(const DGA& dga);

/// Throws ValidationError carrying the first failing axiom's witness.
void require_valid(const DGA& dga);

}  // namespace ainfty
