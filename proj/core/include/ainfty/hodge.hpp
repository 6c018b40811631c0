#pragma once

#include "ainfty/dga.hpp"
#include "ainfty/report.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ainfty {

/// Hodge decomposition of a DGA with respect to its inner product.
struct HodgeData {
  std::shared_ptr<const DGA> dga;
  GradedMap adjoint;    // d*, shift -1
  GradedMap laplacian;  // d d* + d* d
  std::vector<std::vector<Element>> harmonic;  // basis of Ker laplacian, per degree
  GradedMap projector;  // orthogonal projection onto the harmonic space
  GradedMap green;      // inverse of the laplacian off the harmonic space, 0 on it
  GradedMap homotopy;   // Q = G d*, shift -1

  const GradedVectorSpace& space() const { return dga->space; }
  std::vector<std::size_t> harmonic_dims() const;
  /// Harmonic basis in degree-major order.
  std::vector<Element> harmonic_flat() const;
};

/// Per degree, g_n^{-1} d^T g_{n+1}.
GradedMap adjoint(const GradedVectorSpace& space, const GradedMap& diff, const GradedBilinearForm& form);

GradedMap laplacian(const GradedMap& diff, const GradedMap& adjoint);

/// Canonical kernel basis of the laplacian in every degree.
std::vector<std::vector<Element>> harmonic_basis(const GradedVectorSpace& space, const GradedMap& laplacian);

/// Assembles every operator and runs verify_hodge; throws InvariantViolation
/// naming the first failing identity and a witness basis vector.
HodgeData build_hodge(const DGA& dga);

/// Exact checks of every identity relating d, d*, the laplacian, the
/// harmonic projection, G and Q.
Report verify_hodge(const HodgeData& h);

/// alpha^H.
Element harmonic_part(const HodgeData& h, const Element& alpha);

/// The basis label when a harmonic vector is a single basis element with
/// coefficient 1, otherwise "h<n>_<i>".
std::vector<std::string> harmonic_labels(const HodgeData& h);

}  // namespace ainfty
