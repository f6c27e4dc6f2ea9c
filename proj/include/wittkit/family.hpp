#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/constants.hpp"
#include "wittkit/quadspace.hpp"
#include "wittkit/upper_real.hpp"

namespace wittkit {
namespace family {

/// Which member construction applies: two-index members using the
/// anisotropic part (J > 0), two-index members pairing hyperbolic planes
/// (J = 0), or the single-plane construction (witt index 1).
enum class Mode { AnisoCombination, PlanePairing, SinglePlane };

std::string to_string(Mode mode);

/// xi_n = n over Q. Requires n >= 1.
Rat xi(int n);

/// The combination coefficients: -F(u_j)/(2 F(x_i,y_i)) when the anisotropic
/// part is nonempty, else -F(x_j,y_j)/F(x_i,y_i). Keys are (i, j), 1-based.
std::map<std::pair<int, int>, Rat> alpha_coefficients(const QuadraticSpace& q,
                                                      const WittDecomposition& w);

struct Member {
  int n = 0;
  // (i, j) for the two-index modes; (k, 0) for the single-plane mode.
  std::pair<int, int> index;
  std::vector<Vec> spanning;  // the defining spanning set, verbatim
  Subspace subspace;
  Rat height_sq;

  Member() : subspace(Subspace::zero(1)) {}
};

/// The construction data of a family: the mode, the finite index set, the
/// combination coefficients actually used, the family indices, and the
/// per-plane rescalings of the second pair vectors (all 1 except when a
/// degenerate pairing had to be repaired in the plane-pairing mode).
struct FamilySpec {
  Mode mode = Mode::SinglePlane;
  std::vector<std::pair<int, int>> index_set;
  std::map<std::pair<int, int>, Rat> alpha;
  std::vector<int> n_range;
  std::vector<Rat> rescalings;
};

/// Builds the family members for every n in n_range. Requires rank >= 3 and
/// witt index >= 1; the decomposition must carry its certificate.
struct BuildResult {
  FamilySpec spec;
  std::vector<Member> members;

  Mode mode() const { return spec.mode; }
};

BuildResult build_family(const QuadraticSpace& q, const WittDecomposition& w,
                         const std::vector<int>& n_range);

/// Everything verify_family needs from the constants module, evaluated once
/// per instance.
struct BoundContext {
  int ambient = 0, witt_index = 0, lambda = 0, space_dim = 0, rank = 0, aniso_dim = 0;
  UpperReal constant;  // member_constant for these invariants
  Rat alpha;
  Rat beta;

  static BoundContext make(const QuadraticSpace& q, const WittDecomposition& w,
                           const constants::FieldParams& params = constants::FieldParams::rationals(),
                           int prec = UpperReal::kDefaultPrec);
};

struct MemberResult {
  size_t member_index = 0;
  bool isotropic = false;
  bool dimension_ok = false;
  std::string bound_rhs_upper;       // decimal upper bound on the RHS
  std::string bound_rhs_sq_upper;    // decimal upper bound on its square
  bool bound_ok = false;
  bool chain_diagnostic_ok = false;  // spanning-set height estimate, diagnostic
  bool pass = false;
};

struct PairwiseResult {
  size_t first = 0, second = 0;  // indices into the deduplicated subspace list
  size_t dim = 0;
  bool in_range = false;
};

struct TableDiagnostic {
  size_t first_member = 0, second_member = 0;
  size_t measured = 0;
  size_t predicted = 0;
  bool matches = true;
};

struct FamilyReport {
  Mode mode = Mode::SinglePlane;
  std::vector<MemberResult> members;
  size_t distinct_subspaces = 0;
  std::vector<PairwiseResult> pairwise;
  std::vector<std::pair<int, bool>> spanning;  // per n
  std::vector<TableDiagnostic> table_diagnostics;
  bool table_diagnostics_clean = true;  // informational only
  bool pass = false;
};

FamilyReport verify_family(const BuildResult& built, const QuadraticSpace& q,
                           const WittDecomposition& w, const BoundContext& ctx);

}  // namespace family
}  // namespace wittkit
