#pragma once

#include <utility>

#include "wittkit/rational.hpp"
#include "wittkit/upper_real.hpp"

namespace wittkit {
namespace constants {

/// Invariants of the coefficient number field. Only the rational preset gets
/// executed by the pipeline; the evaluators accept general parameters.
struct FieldParams {
  int degree = 1;            // d
  Int disc_abs = 1;          // |discriminant|
  int real_embeddings = 1;   // r1
  int complex_pairs = 0;     // r2
  int roots_of_unity = 2;    // number of roots of unity in the field

  static FieldParams rationals() { return FieldParams{}; }
  void validate() const;  // d = r1 + 2 r2, positivity
};

/// Main height-bound exponent on H(F): ((2w+r)(w+1)(w+2)(w+14) + 4(w+r+16))/8.
/// Requires w >= 1, r >= 3.
Rat alpha_exponent(int witt_index, int rank);

/// Main height-bound exponent on the space height: (w+1)(w+2)(w+14)/2 + 1.
/// Requires w >= 1.
Rat beta_exponent(int witt_index);

/// Growth factor of the n-th family: n^2. Requires n >= 1.
Rat family_growth(int n);

/// C(l) = ((2/pi)^{r2} |D|)^{l/2d}; exactly 1 for the rational preset.
UpperReal const_C(int l, const FieldParams& p, int prec = UpperReal::kDefaultPrec);

/// A(j) = (j sqrt(2^{r1} |D|))^{1/d} when the field has at most j roots of
/// unity, else 1.
UpperReal const_A(int j, const FieldParams& p, int prec = UpperReal::kDefaultPrec);

/// B(j) = 2 |D|^{1/2d} prod_{v inf} r_v(j)^{d_v/d} with the real/complex
/// gamma-factor local terms. Exact closed forms at the half-integer gamma
/// arguments.
UpperReal const_B(int j, const FieldParams& p, int prec = UpperReal::kDefaultPrec);

/// G = A(2) C(2) (characteristic-zero form).
UpperReal const_G(const FieldParams& p, int prec = UpperReal::kDefaultPrec);

/// Component bound constant
/// {(2^{2w+1} B(L)^2)^L (N |D|^{1/d})^{w+5L}}^{w(w+3)/8}.
UpperReal script_G(int ambient, int space_dim, int witt_index, const FieldParams& p,
                   int prec = UpperReal::kDefaultPrec);

/// 3^{L(L-1)/2} when r < L, else 1. Requires r <= L.
Int eta_factor(int space_dim, int rank);

/// Auxiliary exact powers p1(w) = (w+5)(w+1)(w+2)(3/2)^w and
/// p2(w) = ((6w+9) + p1(w)(6w+5))/(4w+2); exposed for cross-checks only.
std::pair<Rat, Rat> auxiliary_powers(int witt_index);

/// Member height prefactor 9 * 2^{(3w+19)/2} N^{(w+12)/2} C(J)^3 G^4 B(1)^{2w+6};
/// C(J) is taken as 1 when the anisotropic part is empty (J = 0).
UpperReal member_prefactor(int ambient, int witt_index, int aniso_dim, const FieldParams& p,
                           int prec = UpperReal::kDefaultPrec);

/// Full member height constant (without the per-n growth factor):
///   J > 0: prefactor * script_G^{w+10} * B(r)^r
///   J = 0: 81 * 2^{3w/2+17} N^{(w+16)/2} B(1)^{2w+12} B(r)^r G^8 script_G^{w+14}.
/// Requires r = 2w + J.
UpperReal member_constant(int ambient, int witt_index, int space_dim, int rank, int aniso_dim,
                          const FieldParams& p, int prec = UpperReal::kDefaultPrec);

}  // namespace constants
}  // namespace wittkit
