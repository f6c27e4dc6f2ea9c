#pragma once

#include <optional>

#include "wittkit/matrix.hpp"
#include "wittkit/places.hpp"
#include "wittkit/rational.hpp"
#include "wittkit/subspace.hpp"

namespace wittkit {

/// A height together with its exact square. `value` is present whenever the
/// height itself is rational (always for the sup-norm heights over Q).
/// `upper` is a double guaranteed to be >= the true value.
struct HeightValue {
  Rat square;
  std::optional<Rat> value;
  double upper = 0.0;
};

HeightValue height_from_value(const Rat& v);
HeightValue height_from_square(const Rat& sq);

/// Projective sup-norm height H: product of max_i |x_i|_v over all places.
/// Over Q this equals the sup-norm of the primitive integer representative.
/// x must be nonzero.
HeightValue sup_height(const Vec& x);

/// Independent route to H: the literal product of local heights over the
/// support places. Used to cross-check sup_height.
HeightValue sup_height_via_places(const Vec& x);

/// Euclidean height: sup-norm local heights at finite places, Euclidean norm
/// at the archimedean place. Exact square; value present when the square is
/// a perfect square. x must be nonzero.
HeightValue euclidean_height(const Vec& x);

/// Inhomogeneous height h(x) = H(1, x_1, ..., x_N); defined for every x,
/// and always >= 1.
HeightValue inhomogeneous_height(const Vec& x);

/// Convenience: the (always rational) value of h.
Rat inhom_value(const Vec& x);

/// H of a matrix viewed as the vector of its entries. m must be nonzero.
HeightValue matrix_height(const Mat& m);

/// Euclidean height of the row span of a full-row-rank matrix: the norm of
/// the wedge of its rows.
HeightValue rowspan_height(const Mat& m);

/// Euclidean height of a subspace via its canonical Grassmann vector.
HeightValue subspace_height(const Subspace& v);

/// Exact duality check: computes a kernel description A of V and compares
/// the Grassmann norms of the basis and of A-transpose. Requires
/// 1 <= dim V < N. Always true; exposed as a verifiable contract.
bool duality_holds(const Subspace& v);

/// Delta exponent of the height inequalities in characteristic zero.
inline constexpr int kCharZeroDelta = 1;

}  // namespace wittkit
