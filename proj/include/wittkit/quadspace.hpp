#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittkit/constants.hpp"
#include "wittkit/matrix.hpp"
#include "wittkit/subspace.hpp"
#include "wittkit/upper_real.hpp"

namespace wittkit {

/// A subspace V of Q^N equipped with a nonzero symmetric bilinear form given
/// by its N x N Gram matrix.
struct QuadraticSpace {
  Mat gram;
  Subspace space;

  QuadraticSpace(Mat gram_matrix, Subspace subspace);
  static QuadraticSpace whole(Mat gram_matrix);

  size_t ambient() const { return space.ambient(); }
  Rat form(const Vec& x) const;                     // F(x)
  Rat bilinear(const Vec& x, const Vec& y) const;   // F(x, y)
};

/// B^T F B for the stored basis B of the space.
Mat restrict_gram(const QuadraticSpace& q);
/// B^T F B for an arbitrary column set.
Mat restrict_gram(const QuadraticSpace& q, const Mat& basis);

/// The radical {x in V : F(x, y) = 0 for all y in V}.
Subspace radical(const QuadraticSpace& q);

struct SearchOptions {
  long search_bound = 10000;   // coefficient sup-norm bound for zero search
  long dim3_cap = 60;          // practical exhaustion caps for anisotropy
  long dim4_cap = 24;          //   certification in dimensions 3 and 4
  int contradiction_retries = 3;
  long pair_search_shells = 3;    // candidate shells in hyperbolic completion
  long basis_cutoff = 64;         // ambient sup-norm cutoff for small bases
};

/// First isotropic vector of the region found by enumerating canonical
/// primitive coefficient vectors (w.r.t. the region's reduced lattice basis)
/// in increasing sup-norm, descending lexicographic within a shell. Returns
/// the primitive ambient representative, or nullopt if none exists within
/// the bound. Dimensions 1 and 2 are resolved in closed form, consistent
/// with the enumeration order.
std::optional<Vec> find_isotropic(const QuadraticSpace& q, const Subspace& region, long bound);

/// Completes an isotropic x (not in the radical of the region) to a
/// hyperbolic pair: y = v - (F(v)/(2F(x,v))) x over enumerated candidates v,
/// keeping the y of least inhomogeneous height (ties broken by the height of
/// the spanned plane, then enumeration order). Output is primitive integer.
Vec complete_hyperbolic_pair(const QuadraticSpace& q, const Vec& x, const Subspace& region,
                             long shells = 3);

/// F-orthogonal complement of `inner` inside `outer`; F must be
/// nondegenerate on `inner`.
Subspace orthogonal_complement(const QuadraticSpace& q, const Subspace& inner, const Subspace& outer);

struct Certificate {
  enum class Kind { Definite, Dim1, Dim2NonSquare, SearchedUpTo, Contradiction };
  Kind kind = Kind::Definite;
  long bound = 0;       // for SearchedUpTo
  std::string detail;
};

std::string to_string(Certificate::Kind kind);

/// Anisotropy certificate for F restricted to U. Exact for definite forms
/// and dimensions <= 2; search-based (up to `bound`) in dimensions 3-4;
/// Contradiction flags that an isotropic vector must exist (degenerate or
/// indefinite of dimension >= 5, or an explicit witness was found).
Certificate certify_anisotropy(const QuadraticSpace& q, const Subspace& u, long bound);

struct HyperbolicPair {
  Vec x, y;  // F(x) = F(y) = 0, F(x,y) != 0, h(x) <= h(y)
};

struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WittDecomposition {
  Subspace radical;
  std::vector<HyperbolicPair> pairs;
  std::vector<Vec> anisotropic;   // small basis of U, heights ascending
  Subspace anisotropic_space;
  Certificate certificate;
  long search_bound_used = 0;

  size_t radical_dim() const { return radical.dim(); }
  size_t witt_index() const { return pairs.size(); }
  size_t aniso_dim() const { return anisotropic_space.dim(); }
  size_t rank() const { return 2 * witt_index() + aniso_dim(); }
  Subspace plane(size_t i) const;  // span of pair i
};

/// Constructive height-aware Witt decomposition. Splits off hyperbolic
/// planes smallest-first until the residue carries an anisotropy
/// certificate; raises the search bound and retries on Contradiction.
/// Never returns an uncertified decomposition.
WittDecomposition witt_decompose(const QuadraticSpace& q, const SearchOptions& opts = {});

struct BoundCheck {
  Rat lhs_sq;
  UpperReal rhs_sq;
  bool pass = false;
};

struct DecompositionBounds {
  BoundCheck radical_bound;                 // radical height vs. B(r)^r H(F)^{r/2} H(V)
  std::optional<BoundCheck> component_bound;  // max plane/aniso height (absent if no components)
  std::vector<std::pair<BoundCheck, BoundCheck>> pair_bounds;  // per-plane x and y bounds
  bool all_pass = true;
};

/// Verifies the decomposition height bounds; failures are outcomes, not
/// errors. Over Q the pair bounds compare exactly.
DecompositionBounds check_decomposition_bounds(const WittDecomposition& w, const QuadraticSpace& q,
                                               const constants::FieldParams& params = constants::FieldParams::rationals(),
                                               int prec = UpperReal::kDefaultPrec);

}  // namespace wittkit
