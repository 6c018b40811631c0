#include "ainfty/cohomology.hpp"

#include "ainfty/errors.hpp"

namespace ainfty {

Element CohomologyRing::classify(const GradedVectorSpace& ambient, const Element& closed) const {
  Element out(space.total_dim());
  for (int n = 0; n <= ambient.top(); ++n) {
    const Vector block = block_of(ambient, closed, n);
    if (is_zero(block)) continue;
    const Matrix& frame = cocycle_frames.at(static_cast<std::size_t>(n));
    Vector c;
    try {
      c = solve_unique(frame, block);
    } catch (const NoSolution&) {
      throw NoSolution("element is not closed in degree " + std::to_string(n));
    }
    for (std::size_t i = 0; i < space.dim(n); ++i) out[space.offset(n) + i] = c[i];
  }
  return out;
}

CohomologyRing cohomology_ring(const DGA& dga) {
  const auto& space = dga.space;
  CohomologyRing ring;
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(space.top() + 1));
  for (int n = 0; n <= space.top(); ++n) {
    std::vector<Vector> boundaries;
    for (const auto& b : image_basis(space, dga.diff, n - 1)) boundaries.push_back(block_of(space, b, n));
    std::vector<Vector> reps;
    std::size_t current = boundaries.size();
    for (const auto& z : kernel_basis(space, dga.diff, n)) {
      std::vector<Vector> trial = reps;
      trial.insert(trial.end(), boundaries.begin(), boundaries.end());
      trial.push_back(block_of(space, z, n));
      if (rank(Matrix::from_columns(space.dim(n), trial)) > current) {
        reps.push_back(block_of(space, z, n));
        ++current;
      }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      labels[static_cast<std::size_t>(n)].push_back("H" + std::to_string(n) + "_" + std::to_string(i));
      ring.representatives.push_back(from_block(space, n, reps[i]));
    }
    std::vector<Vector> frame = reps;
    frame.insert(frame.end(), boundaries.begin(), boundaries.end());
    ring.cocycle_frames.push_back(Matrix::from_columns(space.dim(n), frame));
  }
  ring.space = GradedVectorSpace(std::move(labels));

  const std::size_t h = ring.space.total_dim();
  ring.product = ProductTable(h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const Element prod = multiply(dga, ring.representatives[i], ring.representatives[j]);
      if (prod.is_zero()) continue;
      ring.product.set(i, j, ring.classify(space, prod));
    }
  return ring;
}

}  // namespace ainfty
