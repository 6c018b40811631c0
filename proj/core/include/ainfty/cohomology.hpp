#pragma once

#include "ainfty/dga.hpp"

#include <vector>

namespace ainfty {

/// H(A, d) computed as Ker d / Img d, with no reference to the inner
/// product. Representatives are the kernel vectors that extend an echelon
/// basis of Img d, taken in canonical kernel-basis order.
struct CohomologyRing {
  GradedVectorSpace space;  // class labels "H<n>_<i>"
  std::vector<Element> representatives;  // ambient cocycle for each class
  ProductTable product;

  std::size_t betti(int n) const { return space.dim(n); }
  std::vector<std::size_t> betti_numbers() const { return space.dims(); }

  /// Coordinates of the class of a closed element. Throws NoSolution if the
  /// element is not closed.
  Element classify(const GradedVectorSpace& ambient, const Element& closed) const;

  /// Per degree: columns are representatives followed by a basis of Img d.
  std::vector<Matrix> cocycle_frames;
};

CohomologyRing cohomology_ring(const DGA& dga);

}  // namespace ainfty
