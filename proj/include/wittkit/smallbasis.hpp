#pragma once

#include <stdexcept>
#include <vector>

#include "wittkit/quadspace.hpp"
#include "wittkit/subspace.hpp"

namespace wittkit {

struct CutoffExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A small-height basis of a subspace: primitive integer vectors, heights
/// ascending, with the height product certified against the subspace height.
struct SmallBasis {
  std::vector<Vec> vectors;
  Rat height_product;   // prod h(u_k), exact
  Rat target_sq;        // squared Euclidean height of the subspace
  bool lattice_basis;   // true when the vectors generate the full lattice U n Z^N
};

/// Smallest-first basis of U (dim >= 1) from exhaustive enumeration of the
/// saturated lattice by increasing ambient sup-norm. Prefers a genuine
/// lattice basis; falls back to successive-minima vectors (which provably
/// satisfy the height-product bound) if the basis-completion pass would
/// violate it. Throws CutoffExceeded when the enumeration radius is too
/// small — the caller widens.
SmallBasis small_basis(const Subspace& u, long cutoff);

/// A complement of the radical inside the space, spanned by the smallest
/// enumerated lattice vectors independent of the radical. The form is
/// automatically nondegenerate on it. Requires radical_dim < dim.
Subspace radical_complement(const QuadraticSpace& q);

}  // namespace wittkit
