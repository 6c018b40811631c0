#include "ainfty/dga.hpp"

#include "ainfty/errors.hpp"

#include <map>
#include <stdexcept>

namespace ainfty {

void ProductTable::set(std::size_t left, std::size_t right, const Element& result) {
  if (left >= dim_ || right >= dim_ || result.size() != dim_) throw std::invalid_argument("product entry out of range");
  SparseTerms terms;
  for (std::size_t i = 0; i < dim_; ++i)
    if (sgn(result[i]) != 0) terms.emplace_back(i, result[i]);
  table_[left * dim_ + right] = std::move(terms);
}

Element ProductTable::get(std::size_t left, std::size_t right) const {
  Element e(dim_);
  for (const auto& [i, c] : terms(left, right)) e[i] = c;
  return e;
}

Element ProductTable::multiply(const Element& a, const Element& b) const {
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      const SparseTerms& t = terms(i, j);
      if (t.empty()) continue;
      const Rational ab = a[i] * b[j];
      for (const auto& [k, c] : t) out[k] += ab * c;
    }
  }
  return out;
}

Element multiply(const DGA& dga, const Element& a, const Element& b) { return dga.product.multiply(a, b); }

bool ValidationReport::passed() const { return first_failure() == nullptr; }

const AxiomResult* ValidationReport::first_failure() const {
  for (const auto& a : axioms)
    if (!a.passed) return &a;
  return nullptr;
}

namespace {

using SparseMap = std::map<std::size_t, Rational>;

void accumulate(SparseMap& acc, const Rational& s, const SparseTerms& terms) {
  for (const auto& [k, c] : terms) {
    Rational& slot = acc[k];
    slot += s * c;
    if (sgn(slot) == 0) acc.erase(k);
  }
}

std::string tuple_witness(const GradedVectorSpace& space, std::initializer_list<std::size_t> idx) {
  std::string w = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) w += ", ";
    w += space.label(i);
    first = false;
  }
  return w + ")";
}

AxiomResult check_differential_degree(const DGA& dga) {
  AxiomResult r{"differential_degree", true, {}};
  if (dga.diff.shift() != 1 || dga.diff.top() != dga.space.top()) {
    r.passed = false;
    r.witness = "shift " + std::to_string(dga.diff.shift());
  }
  return r;
}

AxiomResult check_d_squared(const DGA& dga) {
  AxiomResult r{"d_squared", true, {}};
  for (std::size_t i = 0; i < dga.dim(); ++i) {
    const Element dd = dga.d(dga.d(dga.basis(i)));
    if (!dd.is_zero()) {
      r.passed = false;
      r.witness = "(" + dga.space.label(i) + ") -> " + format_element(dga.space, dd);
      return r;
    }
  }
  return r;
}

AxiomResult check_degree_additivity(const DGA& dga) {
  AxiomResult r{"degree_additivity", true, {}};
  const auto& space = dga.space;
  for (std::size_t i = 0; i < dga.dim(); ++i)
    for (std::size_t j = 0; j < dga.dim(); ++j)
      for (const auto& [k, c] : dga.product.terms(i, j)) {
        if (space.degree_of(k) != space.degree_of(i) + space.degree_of(j)) {
          r.passed = false;
          r.witness = tuple_witness(space, {i, j}) + " -> " + space.label(k);
          return r;
        }
      }
  return r;
}

AxiomResult check_associativity(const DGA& dga) {
  AxiomResult r{"associativity", true, {}};
  const auto& space = dga.space;
  const auto& p = dga.product;
  const std::size_t n = dga.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseTerms& ij = p.terms(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (space.degree_of(i) + space.degree_of(j) + space.degree_of(k) > space.top()) continue;
        SparseMap lhs;
        for (const auto& [m, c] : ij) accumulate(lhs, c, p.terms(m, k));
        SparseMap rhs;
        for (const auto& [m, c] : p.terms(j, k)) accumulate(rhs, c, p.terms(i, m));
        if (lhs != rhs) {
          r.passed = false;
          r.witness = tuple_witness(space, {i, j, k});
          return r;
        }
      }
    }
  return r;
}

AxiomResult check_leibniz(const DGA& dga) {
  AxiomResult r{"leibniz", true, {}};
  const auto& space = dga.space;
  std::vector<Element> d_basis;
  d_basis.reserve(dga.dim());
  for (std::size_t i = 0; i < dga.dim(); ++i) d_basis.push_back(dga.d(dga.basis(i)));
  for (std::size_t i = 0; i < dga.dim(); ++i)
    for (std::size_t j = 0; j < dga.dim(); ++j) {
      const Element a = dga.basis(i);
      const Element b = dga.basis(j);
      const Element lhs = dga.d(dga.product.get(i, j));
      Element rhs = multiply(dga, d_basis[i], b);
      const Rational sign = space.degree_of(i) % 2 == 0 ? 1 : -1;
      rhs.add_scaled(sign, multiply(dga, a, d_basis[j]));
      if (!(lhs == rhs)) {
        r.passed = false;
        r.witness = tuple_witness(space, {i, j});
        return r;
      }
    }
  return r;
}

AxiomResult check_unit(const DGA& dga) {
  AxiomResult r{"unit", true, {}};
  if (!dga.unit) return r;
  const Element& u = *dga.unit;
  if (u.size() != dga.dim() || homogeneous_degree(dga.space, u) != 0) {
    r.passed = false;
    r.witness = "unit is not a nonzero degree-0 element";
    return r;
  }
  if (!dga.d(u).is_zero()) {
    r.passed = false;
    r.witness = "d(unit) = " + format_element(dga.space, dga.d(u));
    return r;
  }
  for (std::size_t i = 0; i < dga.dim(); ++i) {
    const Element a = dga.basis(i);
    if (!(multiply(dga, u, a) == a) || !(multiply(dga, a, u) == a)) {
      r.passed = false;
      r.witness = "(unit, " + dga.space.label(i) + ")";
      return r;
    }
  }
  return r;
}

AxiomResult check_gram(const DGA& dga) {
  AxiomResult r{"gram_positive_definite", true, {}};
  for (int n = 0; n <= dga.space.top(); ++n) {
    if (static_cast<std::size_t>(n) >= dga.form.degrees()) {
      r.passed = false;
      r.witness = "degree " + std::to_string(n) + ": no Gram matrix";
      return r;
    }
    const Matrix& g = dga.form.gram(n);
    if (g.rows() != dga.space.dim(n) || g.cols() != dga.space.dim(n) || !is_positive_definite(g)) {
      r.passed = false;
      r.witness = "degree " + std::to_string(n);
      return r;
    }
  }
  return r;
}

}  // namespace

ValidationReport validate_dga(const DGA& dga) {
  ValidationReport report;
  report.axioms.push_back(check_differential_degree(dga));
  if (!report.axioms.back().passed) return report;
  report.axioms.push_back(check_gram(dga));
  report.axioms.push_back(check_d_squared(dga));
  report.axioms.push_back(check_degree_additivity(dga));
  report.axioms.push_back(check_associativity(dga));
  report.axioms.push_back(check_leibniz(dga));
  report.axioms.push_back(check_unit(dga));
  return report;
}

void require_valid(const DGA& dga) {
  const ValidationReport report = validate_dga(dga);
  if (const AxiomResult* f = report.first_failure())
    throw ValidationError("DGA axiom '" + f->axiom + "' fails", f->witness);
}

}  // namespace ainfty
