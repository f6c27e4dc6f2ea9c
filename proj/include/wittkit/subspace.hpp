#pragma once

#include <vector>

#include "wittkit/matrix.hpp"
#include "wittkit/rational.hpp"

namespace wittkit {

/// A linear subspace of Q^N given by a full-column-rank basis matrix together
/// with its canonical Grassmann coordinate vector: the maximal minors of the
/// basis, cleared to a primitive integer vector with positive leading entry.
/// The coordinate vector depends only on the span, so it serves as the
/// identity of the subspace.
class Subspace {
 public:
  /// Basis is N x L with rank exactly L (L = 0 gives the zero subspace).
  Subspace(size_t ambient, Mat basis);

  static Subspace full(size_t ambient);
  static Subspace zero(size_t ambient);
  /// Span of a generating set; keeps the first maximal independent subset as
  /// the stored basis.
  static Subspace span(size_t ambient, const std::vector<Vec>& generators);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  const std::vector<Int>& grassmann() const { return grassmann_; }

  /// Squared Euclidean norm of the canonical Grassmann vector.
  Rat height_sq() const;

  bool contains(const Vec& x) const;
  bool operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && grassmann_ == rhs.grassmann_;
  }
  bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

 private:
  size_t ambient_;
  Mat basis_;
  std::vector<Int> grassmann_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
size_t intersection_dim(const Subspace& a, const Subspace& b);

/// Exact kernel description: rows of the result form a basis of
/// {a in Q^N : a . x = 0 for all x in V}; V = {x : A x = 0}. Requires dim < N.
Mat annihilator(const Subspace& v);

}  // namespace wittkit
