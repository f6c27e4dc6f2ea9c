#include "wittkit/constants.hpp"

#include <stdexcept>

namespace wittkit {
namespace constants {

void FieldParams::validate() const {
  if (degree < 1 || disc_abs < 1 || real_embeddings < 0 || complex_pairs < 0 || roots_of_unity < 2) {
    throw std::invalid_argument("invalid number field parameters");
  }
  if (degree != real_embeddings + 2 * complex_pairs) {
    throw std::invalid_argument("degree must equal r1 + 2*r2");
  }
}

Rat alpha_exponent(int witt_index, int rank) {
  if (witt_index < 1 || rank < 3) throw std::invalid_argument("alpha_exponent requires w >= 1, r >= 3");
  Rat w(witt_index), r(rank);
  return ((2 * w + r) * (w + 1) * (w + 2) * (w + 14) + 4 * (w + r + 16)) / 8;
}

Rat beta_exponent(int witt_index) {
  if (witt_index < 1) throw std::invalid_argument("beta_exponent requires w >= 1");
  Rat w(witt_index);
  return (w + 1) * (w + 2) * (w + 14) / 2 + 1;
}

Rat family_growth(int n) {
  if (n < 1) throw std::invalid_argument("family index must be >= 1");
  return Rat(n) * Rat(n);
}

namespace {

// Gamma at integer or half-integer argument 2*arg2 = k: exact coefficient and
// whether a sqrt(pi) factor is present.
struct GammaClosed {
  Rat coeff;
  bool has_sqrt_pi;
};

GammaClosed gamma_closed(int twice_arg) {
  if (twice_arg < 1) throw std::invalid_argument("gamma argument must be positive");
  if (twice_arg % 2 == 0) {
    int k = twice_arg / 2;  // Gamma(k) = (k-1)!
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k - 1));
    return {Rat(f), false};
  }
  // Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
  int m = (twice_arg - 1) / 2;
  Int num, den, four_m;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * m));
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
  return {Rat(num) / (Rat(four_m) * Rat(den)), true};
}

UpperReal gamma_upper(const GammaClosed& g, int prec) {
  UpperReal c = UpperReal::from_rat(g.coeff, prec);
  if (!g.has_sqrt_pi) return c;
  return c * UpperReal::pi(prec).sqrt();
}

}  // namespace

UpperReal const_C(int l, const FieldParams& p, int prec) {
  p.validate();
  if (l < 1) throw std::invalid_argument("const_C requires l >= 1");
  if (p.complex_pairs == 0 && p.disc_abs == 1) return UpperReal::from_int(1, prec);
  UpperReal two_over_pi = UpperReal::from_int(2, prec) / UpperReal::pi(prec);
  UpperReal base = two_over_pi.pow(Rat(p.complex_pairs)) * UpperReal::from_rat(Rat(p.disc_abs), prec);
  return base.pow(frac(l, 2 * p.degree));
}

UpperReal const_A(int j, const FieldParams& p, int prec) {
  p.validate();
  if (j < 1) throw std::invalid_argument("const_A requires j >= 1");
  if (p.roots_of_unity > j) return UpperReal::from_int(1, prec);
  Int pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(p.real_embeddings));
  UpperReal inner = UpperReal::from_int(j, prec) * UpperReal::from_sqrt_rat(Rat(pow2 * p.disc_abs), prec);
  return inner.pow(frac(1, p.degree));
}

UpperReal const_B(int j, const FieldParams& p, int prec) {
  p.validate();
  if (j < 1) throw std::invalid_argument("const_B requires j >= 1");
  UpperReal out = UpperReal::from_int(2, prec) *
                  UpperReal::from_rat(Rat(p.disc_abs), prec).pow(frac(1, 2 * p.degree));
  if (p.real_embeddings > 0) {
    // r_real(j) = pi^{-1/2} Gamma(j/2 + 1)^{1/j}, exponent r1/d
    UpperReal r_real(prec);
    if (j == 1) {
      r_real = UpperReal::from_rat(frac(1, 2), prec);  // Gamma(3/2) = sqrt(pi)/2
    } else {
      UpperReal g = gamma_upper(gamma_closed(j + 2), prec);
      r_real = g.pow(frac(1, j)) / UpperReal::pi(prec).sqrt();
    }
    out = out * r_real.pow(frac(p.real_embeddings, p.degree));
  }
  if (p.complex_pairs > 0) {
    // r_complex(j) = (2 pi)^{-1/2} Gamma(j+1)^{1/2j}, exponent 2 r2/d
    Int fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(j));
    UpperReal g = UpperReal::from_rat(Rat(fac), prec).pow(frac(1, 2 * j));
    UpperReal two_pi = UpperReal::from_int(2, prec) * UpperReal::pi(prec);
    UpperReal r_complex = g / two_pi.sqrt();
    out = out * r_complex.pow(frac(2 * p.complex_pairs, p.degree));
  }
  return out;
}

UpperReal const_G(const FieldParams& p, int prec) {
  return const_A(2, p, prec) * const_C(2, p, prec);
}

UpperReal script_G(int ambient, int space_dim, int witt_index, const FieldParams& p, int prec) {
  p.validate();
  if (witt_index < 1 || space_dim < 1 || space_dim > ambient) {
    throw std::invalid_argument("script_G requires 1 <= w and 1 <= L <= N");
  }
  Int pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * witt_index + 1));
  UpperReal b = const_B(space_dim, p, prec);
  UpperReal first = (UpperReal::from_rat(Rat(pow2), prec) * b.pow(Rat(2))).pow(Rat(space_dim));
  UpperReal disc_root = UpperReal::from_rat(Rat(p.disc_abs), prec).pow(frac(1, p.degree));
  UpperReal second = (UpperReal::from_int(ambient, prec) * disc_root).pow(Rat(witt_index + 5 * space_dim));
  Rat outer = frac(witt_index * (witt_index + 3), 8);
  return (first * second).pow(outer);
}

Int eta_factor(int space_dim, int rank) {
  if (rank > space_dim) throw std::invalid_argument("eta_factor requires r <= L");
  if (rank == space_dim) return 1;
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3,
                static_cast<unsigned long>(space_dim * (space_dim - 1) / 2));
  return out;
}

std::pair<Rat, Rat> auxiliary_powers(int witt_index) {
  if (witt_index < 1) throw std::invalid_argument("auxiliary_powers requires w >= 1");
  Rat w(witt_index);
  Rat three_halves_pow = 1;
  for (int i = 0; i < witt_index; ++i) three_halves_pow *= frac(3, 2);
  Rat p1 = (w + 5) * (w + 1) * (w + 2) * three_halves_pow;
  Rat p2 = ((6 * w + 9) + p1 * (6 * w + 5)) / (4 * w + 2);
  return {p1, p2};
}

UpperReal member_prefactor(int ambient, int witt_index, int aniso_dim, const FieldParams& p, int prec) {
  p.validate();
  if (witt_index < 1 || aniso_dim < 0) {
    throw std::invalid_argument("member_prefactor requires w >= 1 and J >= 0");
  }
  UpperReal c_cubed = aniso_dim == 0 ? UpperReal::from_int(1, prec)
                                     : const_C(aniso_dim, p, prec).pow(Rat(3));
  UpperReal out = UpperReal::from_int(9, prec) *
                  UpperReal::from_int(2, prec).pow(frac(3 * witt_index + 19, 2)) *
                  UpperReal::from_int(ambient, prec).pow(frac(witt_index + 12, 2)) *
                  c_cubed * const_G(p, prec).pow(Rat(4)) *
                  const_B(1, p, prec).pow(Rat(2 * witt_index + 6));
  return out;
}

UpperReal member_constant(int ambient, int witt_index, int space_dim, int rank, int aniso_dim,
                          const FieldParams& p, int prec) {
  p.validate();
  if (rank != 2 * witt_index + aniso_dim) {
    throw std::invalid_argument("inconsistent (w, r, J): rank must equal 2w + J");
  }
  UpperReal br = const_B(rank, p, prec).pow(Rat(rank));
  UpperReal sg = script_G(ambient, space_dim, witt_index, p, prec);
  if (aniso_dim > 0) {
    return member_prefactor(ambient, witt_index, aniso_dim, p, prec) *
           sg.pow(Rat(witt_index + 10)) * br;
  }
  return UpperReal::from_int(81, prec) *
         UpperReal::from_int(2, prec).pow(frac(3 * witt_index, 2) + 17) *
         UpperReal::from_int(ambient, prec).pow(frac(witt_index + 16, 2)) *
         const_B(1, p, prec).pow(Rat(2 * witt_index + 12)) * br *
         const_G(p, prec).pow(Rat(8)) * sg.pow(Rat(witt_index + 14));
}

}  // namespace constants
}  // namespace wittkit
