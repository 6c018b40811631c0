#include "ainfty/hodge.hpp"

#include "ainfty/errors.hpp"

namespace ainfty {

std::vector<std::size_t> HodgeData::harmonic_dims() const {
  std::vector<std::size_t> dims;
  for (const auto& h : harmonic) dims.push_back(h.size());
  return dims;
}

std::vector<Element> HodgeData::harmonic_flat() const {
  std::vector<Element> out;
  for (const auto& level : harmonic) out.insert(out.end(), level.begin(), level.end());
  return out;
}

GradedMap adjoint(const GradedVectorSpace& space, const GradedMap& diff, const GradedBilinearForm& form) {
  GradedMap adj = GradedMap::zero(space, -diff.shift());
  for (int n = 0; n <= space.top(); ++n) {
    const int src = n + diff.shift();  // d: n -> src, d*: src -> n
    if (src < 0 || src > space.top()) continue;
    adj.set_block(src, inverse(form.gram(n)) * diff.block(n).transpose() * form.gram(src));
  }
  return adj;
}

GradedMap laplacian(const GradedMap& diff, const GradedMap& adjoint) {
  return compose(diff, adjoint) + compose(adjoint, diff);
}

std::vector<std::vector<Element>> harmonic_basis(const GradedVectorSpace& space, const GradedMap& laplacian) {
  std::vector<std::vector<Element>> out;
  for (int n = 0; n <= space.top(); ++n) out.push_back(kernel_basis(space, laplacian, n));
  return out;
}

Element harmonic_part(const HodgeData& h, const Element& alpha) { return h.projector.apply(h.space(), alpha); }

std::vector<std::string> harmonic_labels(const HodgeData& h) {
  std::vector<std::string> labels;
  for (int n = 0; n < static_cast<int>(h.harmonic.size()); ++n)
    for (std::size_t i = 0; i < h.harmonic[static_cast<std::size_t>(n)].size(); ++i) {
      const Element& v = h.harmonic[static_cast<std::size_t>(n)][i];
      std::optional<std::size_t> single;
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(v[j]) != 0) {
          ++nonzero;
          if (v[j] == 1) single = j;
        }
      if (nonzero == 1 && single)
        labels.push_back(h.space().label(*single));
      else
        labels.push_back("h" + std::to_string(n) + "_" + std::to_string(i));
    }
  return labels;
}

namespace {

/// Label of the first basis vector on which f and g differ; empty if equal.
std::string first_difference(const GradedVectorSpace& space, const GradedMap& f, const GradedMap& g) {
  for (std::size_t i = 0; i < space.total_dim(); ++i)
    if (!(f.apply_basis(space, i) == g.apply_basis(space, i))) return space.label(i);
  return {};
}

CheckResult map_identity(const std::string& name, const GradedVectorSpace& space, const GradedMap& f,
                         const GradedMap& g) {
  CheckResult r{name, true, {}, {}};
  if (f.shift() != g.shift()) {
    r.passed = false;
    r.witnesses.push_back("degree shifts differ");
    return r;
  }
  const std::string w = first_difference(space, f, g);
  if (!w.empty()) {
    r.passed = false;
    r.witnesses.push_back(w);
  }
  return r;
}

CheckResult map_vanishes(const std::string& name, const GradedVectorSpace& space, const GradedMap& f) {
  return map_identity(name, space, f, GradedMap::zero(space, f.shift()));
}

/// Degree-0 map m is self-adjoint: g m = m^T g on every block.
CheckResult symmetric_for_form(const std::string& name, const GradedVectorSpace& space, const GradedMap& m,
                               const GradedBilinearForm& form) {
  CheckResult r{name, true, {}, {}};
  for (int n = 0; n <= space.top(); ++n) {
    const Matrix lhs = form.gram(n) * m.block(n);
    if (!(lhs == lhs.transpose())) {
      r.passed = false;
      r.witnesses.push_back("degree " + std::to_string(n));
      return r;
    }
  }
  return r;
}

}  // namespace

Report verify_hodge(const HodgeData& h) {
  const DGA& dga = *h.dga;
  const auto& space = dga.space;
  const auto& form = dga.form;
  const GradedMap& d = dga.diff;
  const GradedMap& ds = h.adjoint;
  const GradedMap& pi = h.projector;
  const GradedMap& g = h.green;
  const GradedMap& q = h.homotopy;
  const GradedMap id = GradedMap::identity(space);
  Report report{"hodge", {}};

  {
    CheckResult r{"adjoint_identity", true, {}, {}};
    for (std::size_t a = 0; a < space.total_dim() && r.passed; ++a)
      for (std::size_t b = 0; b < space.total_dim(); ++b) {
        const Element ea = dga.basis(a);
        const Element eb = dga.basis(b);
        if (form.pair(space, dga.d(ea), eb) != form.pair(space, ea, ds.apply(space, eb))) {
          r.passed = false;
          r.witnesses.push_back("(" + space.label(a) + ", " + space.label(b) + ")");
          break;
        }
      }
    report.add(std::move(r));
  }
  report.add(map_vanishes("adjoint_squared", space, compose(ds, ds)));
  report.add(symmetric_for_form("laplacian_symmetric", space, h.laplacian, form));

  {
    CheckResult r{"harmonic_equals_closed_and_coclosed", true, {}, {}};
    for (int n = 0; n <= space.top() && r.passed; ++n) {
      for (const auto& v : h.harmonic[static_cast<std::size_t>(n)])
        if (!dga.d(v).is_zero() || !ds.apply(space, v).is_zero()) {
          r.passed = false;
          r.witnesses.push_back(format_element(space, v));
          break;
        }
      // dim(Ker d  intersect Ker d*) via the stacked operator
      const Matrix& dn = d.block(n);
      const Matrix& dsn = ds.block(n);
      Matrix stacked(dn.rows() + dsn.rows(), space.dim(n));
      for (std::size_t i = 0; i < dn.rows(); ++i)
        for (std::size_t j = 0; j < space.dim(n); ++j) stacked(i, j) = dn(i, j);
      for (std::size_t i = 0; i < dsn.rows(); ++i)
        for (std::size_t j = 0; j < space.dim(n); ++j) stacked(dn.rows() + i, j) = dsn(i, j);
      const std::size_t both = space.dim(n) - rank(stacked);
      if (r.passed && both != h.harmonic[static_cast<std::size_t>(n)].size()) {
        r.passed = false;
        r.witnesses.push_back("degree " + std::to_string(n));
      }
    }
    report.add(std::move(r));
  }

  {
    CheckResult r{"hodge_dimension_count", true, {}, {}};
    for (int n = 0; n <= space.top(); ++n) {
      const std::size_t exact = n > 0 ? rank(d.block(n - 1)) : 0;
      const std::size_t coexact = n < space.top() ? rank(ds.block(n + 1)) : 0;
      if (space.dim(n) != h.harmonic[static_cast<std::size_t>(n)].size() + exact + coexact) {
        r.passed = false;
        r.witnesses.push_back("degree " + std::to_string(n));
        break;
      }
    }
    report.add(std::move(r));
  }

  report.add(map_identity("projector_idempotent", space, compose(pi, pi), pi));
  {
    CheckResult r{"projector_image_is_harmonic", true, {}, {}};
    for (int n = 0; n <= space.top() && r.passed; ++n) {
      for (const auto& v : h.harmonic[static_cast<std::size_t>(n)])
        if (!(pi.apply(space, v) == v)) {
          r.passed = false;
          r.witnesses.push_back(format_element(space, v));
          break;
        }
      if (r.passed && rank(pi.block(n)) != h.harmonic[static_cast<std::size_t>(n)].size()) {
        r.passed = false;
        r.witnesses.push_back("degree " + std::to_string(n));
      }
    }
    report.add(std::move(r));
  }
  report.add(symmetric_for_form("projector_symmetric", space, pi, form));

  report.add(map_identity("green_laplacian", space, compose(g, h.laplacian), id - pi));
  report.add(map_identity("laplacian_green", space, compose(h.laplacian, g), id - pi));
  report.add(map_vanishes("green_projector", space, compose(g, pi)));
  report.add(map_vanishes("projector_green", space, compose(pi, g)));
  report.add(map_identity("green_commutes_with_d", space, compose(g, d), compose(d, g)));
  report.add(map_identity("green_commutes_with_adjoint", space, compose(g, ds), compose(ds, g)));
  report.add(map_identity("homotopy_formula", space, id - compose(d, q) - compose(q, d), pi));
  report.add(map_vanishes("homotopy_squared", space, compose(q, q)));
  report.add(map_vanishes("projector_homotopy", space, compose(pi, q)));
  report.add(map_vanishes("homotopy_projector", space, compose(q, pi)));
  return report;
}

HodgeData build_hodge(const DGA& dga) {
  const auto& space = dga.space;
  HodgeData h;
  h.dga = std::make_shared<const DGA>(dga);
  h.adjoint = adjoint(space, dga.diff, dga.form);
  h.laplacian = laplacian(dga.diff, h.adjoint);
  h.harmonic = harmonic_basis(space, h.laplacian);
  h.projector = orthogonal_projection(space, h.harmonic_flat(), dga.form);

  h.green = GradedMap::zero(space, 0);
  for (int n = 0; n <= space.top(); ++n) {
    const std::size_t dim = space.dim(n);
    if (dim == 0) continue;
    // Orthogonal complement of the harmonic space in degree n.
    std::vector<Vector> harm;
    for (const auto& v : h.harmonic[static_cast<std::size_t>(n)]) harm.push_back(block_of(space, v, n));
    const Matrix constraints =
        harm.empty() ? Matrix(0, dim) : Matrix::from_columns(dim, harm).transpose() * dga.form.gram(n);
    const Matrix complement = constraints.rows() == 0 ? Matrix::identity(dim) : kernel(constraints);
    std::vector<Element> allowed;
    for (std::size_t j = 0; j < complement.cols(); ++j) allowed.push_back(from_block(space, n, complement.column(j)));

    Matrix block(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const Element e = dga.basis(space.global_index(n, j));
      const Element rhs = e - h.projector.apply(space, e);
      if (rhs.is_zero()) continue;
      const Element x = solve_in_subspace(space, h.laplacian, rhs, allowed);
      const Vector local = block_of(space, x, n);
      for (std::size_t i = 0; i < dim; ++i) block(i, j) = local[i];
    }
    h.green.set_block(n, std::move(block));
  }
  h.homotopy = compose(h.green, h.adjoint);

  const Report report = verify_hodge(h);
  for (const auto& r : report.results)
    if (!r.passed) throw InvariantViolation("Hodge identity '" + r.name + "' fails", r.witnesses.empty() ? "" : r.witnesses.front());
  return h;
}

}  // namespace ainfty
