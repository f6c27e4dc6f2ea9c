#include "wittkit/upper_real.hpp"

#include <stdexcept>
#include <utility>

namespace wittkit {

UpperReal::UpperReal(int prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_ui(lo_, 0, MPFR_RNDD);
  mpfr_set_ui(hi_, 0, MPFR_RNDU);
}

UpperReal::UpperReal(const UpperReal& other)
    : exact_(other.exact_), exact_sq_(other.exact_sq_), prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

UpperReal::UpperReal(UpperReal&& other) noexcept
    : exact_(std::move(other.exact_)), exact_sq_(std::move(other.exact_sq_)), prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

UpperReal& UpperReal::operator=(UpperReal other) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(exact_, other.exact_);
  std::swap(exact_sq_, other.exact_sq_);
  std::swap(prec_, other.prec_);
  return *this;
}

UpperReal::~UpperReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void UpperReal::set_exact(const Rat& v) {
  exact_ = v;
  exact_sq_ = v * v;
  mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

void UpperReal::set_exact_sq(const Rat& sq) {
  if (std::optional<Rat> root = exact_sqrt(sq)) {
    set_exact(*root);
  } else {
    exact_sq_ = sq;
  }
}

UpperReal UpperReal::from_rat(const Rat& v, int prec) {
  if (v < 0) throw std::invalid_argument("UpperReal is restricted to nonnegative values");
  UpperReal r(prec);
  r.set_exact(v);
  return r;
}

UpperReal UpperReal::from_int(long v, int prec) { return from_rat(Rat(v), prec); }

UpperReal UpperReal::from_sqrt_rat(const Rat& sq, int prec) {
  if (sq < 0) throw std::invalid_argument("negative square");
  if (std::optional<Rat> root = exact_sqrt(sq)) return from_rat(*root, prec);
  UpperReal r(prec);
  mpfr_set_q(r.lo_, sq.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, sq.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
  r.set_exact_sq(sq);
  return r;
}

UpperReal UpperReal::pi(int prec) {
  UpperReal r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

UpperReal UpperReal::operator*(const UpperReal& rhs) const {
  UpperReal r(std::max(prec_, rhs.prec_));
  mpfr_mul(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_mul(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
  if (exact_ && rhs.exact_) {
    r.set_exact(*exact_ * *rhs.exact_);
  } else if (exact_sq_ && rhs.exact_sq_) {
    r.set_exact_sq(*exact_sq_ * *rhs.exact_sq_);
  }
  return r;
}

UpperReal UpperReal::operator/(const UpperReal& rhs) const {
  if (mpfr_sgn(rhs.lo_) <= 0 && !rhs.exact_) {
    throw std::invalid_argument("division by interval touching zero");
  }
  if (rhs.exact_ && *rhs.exact_ == 0) throw std::invalid_argument("division by zero");
  UpperReal r(std::max(prec_, rhs.prec_));
  mpfr_div(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_div(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
  if (exact_ && rhs.exact_) {
    r.set_exact(*exact_ / *rhs.exact_);
  } else if (exact_sq_ && rhs.exact_sq_) {
    r.set_exact_sq(*exact_sq_ / *rhs.exact_sq_);
  }
  return r;
}

namespace {

// x^k with directed rounding for nonnegative x and integer k.
void pow_int_dir(mpfr_t out, const mpfr_t base_lo, const mpfr_t base_hi, const Int& k, bool want_upper) {
  mpfr_rnd_t rnd = want_upper ? MPFR_RNDU : MPFR_RNDD;
  // monotone increasing in base for k >= 0, decreasing for k < 0
  const mpfr_srcptr base = (k >= 0) == want_upper ? base_hi : base_lo;
  mpfr_pow_z(out, base, k.get_mpz_t(), rnd);
}

}  // namespace

UpperReal UpperReal::pow(const Rat& e) const {
  Rat exp = e;
  exp.canonicalize();
  Int num = exp.get_num();
  Int den = exp.get_den();
  UpperReal r(prec_);
  if (mpfr_sgn(lo_) < 0) throw std::invalid_argument("pow requires a nonnegative base");
  if (num < 0 && mpfr_sgn(lo_) == 0) throw std::invalid_argument("negative power of interval touching zero");

  if (den == 1) {
    pow_int_dir(r.lo_, lo_, hi_, num, false);
    pow_int_dir(r.hi_, lo_, hi_, num, true);
  } else {
    unsigned long q = den.get_ui();
    mpfr_t root_lo, root_hi;
    mpfr_init2(root_lo, prec_);
    mpfr_init2(root_hi, prec_);
    mpfr_rootn_ui(root_lo, lo_, q, MPFR_RNDD);
    mpfr_rootn_ui(root_hi, hi_, q, MPFR_RNDU);
    pow_int_dir(r.lo_, root_lo, root_hi, num, false);
    pow_int_dir(r.hi_, root_lo, root_hi, num, true);
    mpfr_clear(root_lo);
    mpfr_clear(root_hi);
  }

  // Exactness propagation: integer exponents keep exact values; half-integer
  // exponents keep exact squares.
  auto rat_pow = [](const Rat& base, const Int& k) {
    Rat out;
    if (k >= 0) {
      mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k.get_ui());
      mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k.get_ui());
    } else {
      Int a = -k;
      if (base == 0) throw std::invalid_argument("zero to a negative power");
      mpz_pow_ui(out.get_num_mpz_t(), base.get_den_mpz_t(), a.get_ui());
      mpz_pow_ui(out.get_den_mpz_t(), base.get_num_mpz_t(), a.get_ui());
    }
    out.canonicalize();
    return out;
  };
  if (den == 1) {
    if (exact_) {
      UpperReal out = from_rat(rat_pow(*exact_, num), prec_);
      return out;
    }
    if (exact_sq_) {
      if (num % 2 == 0) {
        return from_rat(rat_pow(*exact_sq_, num / 2), prec_);
      }
      r.set_exact_sq(rat_pow(*exact_sq_, num));
    }
  } else if (den == 2) {
    if (exact_) {
      if (num % 2 == 0) return from_rat(rat_pow(*exact_, num / 2), prec_);
      r.set_exact_sq(rat_pow(*exact_, num));
    } else if (exact_sq_ && num % 2 == 0) {
      r.set_exact_sq(rat_pow(*exact_sq_, num / 2));
    }
  }
  return r;
}

UpperReal UpperReal::sqrt() const { return pow(frac(1, 2)); }

UpperReal UpperReal::square() const { return pow(Rat(2)); }

double UpperReal::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double UpperReal::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

std::string UpperReal::upper_string() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.20RUe", hi_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

bool UpperReal::at_least(const Rat& v) const {
  if (exact_) return *exact_ >= v;
  return mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool UpperReal::upper_at_most(const UpperReal& other) const {
  return mpfr_cmp(hi_, other.hi_) <= 0;
}

}  // namespace wittkit
