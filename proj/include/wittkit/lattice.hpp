#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wittkit/matrix.hpp"
#include "wittkit/subspace.hpp"

namespace wittkit {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major

/// Basis of the integer kernel {x in Z^n : A x = 0} of an integer matrix
/// (rows may be empty, meaning the kernel is all of Z^n). Columns of the
/// result are the basis vectors.
IMat integer_kernel(const IMat& a, size_t ncols);

/// Basis of the saturated lattice V n Z^N, as integer columns. The result
/// depends only on the subspace, not on the stored basis.
IMat saturation(const Subspace& v);

/// LLL reduction (delta = 99/100) of an independent set of integer columns.
/// Deterministic; exact rational Gram-Schmidt throughout.
IMat lll_reduce(const IMat& columns);

/// Saturated, LLL-reduced lattice basis of V n Z^N as a rational matrix
/// (N x dim). This is the canonical working basis for enumeration.
Mat reduced_lattice_basis(const Subspace& v);

/// Visits every canonical vector (primitive, first nonzero positive) of
/// sup-norm exactly `shell`, in descending lexicographic order with digit
/// order s, s-1, ..., -s. Stops early when the visitor returns false;
/// returns whether the walk ran to completion. Recursion prunes the interior
/// of the box, so the cost is proportional to the shell boundary.
bool visit_canonical_shell(size_t dim, long shell, const std::function<bool(const std::vector<long>&)>& visit);

/// Enumerates canonical coefficient vectors (primitive, first nonzero
/// positive) by increasing sup-norm shell; within a shell, by descending
/// lexicographic order with digit order s, s-1, ..., -s. Deterministic.
class PrimitiveEnumerator {
 public:
  explicit PrimitiveEnumerator(size_t dim);

  /// Next canonical vector with sup-norm <= max_sup, or nullopt when the
  /// bound is exhausted. max_sup must not decrease between calls.
  std::optional<std::vector<long>> next(long max_sup);

  long current_shell() const { return shell_; }

 private:
  bool advance_odometer();
  bool start_shell(long s);

  size_t dim_;
  long shell_;
  std::vector<long> digits_;
  bool fresh_;
};

}  // namespace wittkit
