#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "wittkit/rational.hpp"

namespace wittkit {

/// Positive real computed with directed rounding: an enclosing [lo, hi]
/// interval at a fixed precision, plus exactness tags. `exact` is set when
/// the value itself is a known rational; `exact_sq` when its square is.
/// The public contract is the upper bound: upper() >= true value, always.
/// Arithmetic restricted to positive operands, which is all the height
/// machinery needs.
class UpperReal {
 public:
  static constexpr int kDefaultPrec = 192;

  explicit UpperReal(int prec = kDefaultPrec);
  UpperReal(const UpperReal& other);
  UpperReal(UpperReal&& other) noexcept;
  UpperReal& operator=(UpperReal other);
  ~UpperReal();

  static UpperReal from_rat(const Rat& v, int prec = kDefaultPrec);
  static UpperReal from_int(long v, int prec = kDefaultPrec);
  /// Value sqrt(sq) for sq >= 0, with the square tracked exactly.
  static UpperReal from_sqrt_rat(const Rat& sq, int prec = kDefaultPrec);
  static UpperReal pi(int prec = kDefaultPrec);

  UpperReal operator*(const UpperReal& rhs) const;
  UpperReal operator/(const UpperReal& rhs) const;
  /// x^e for positive x and rational e (q-th root, then integer power).
  UpperReal pow(const Rat& e) const;
  UpperReal sqrt() const;
  UpperReal square() const;

  const std::optional<Rat>& exact() const { return exact_; }
  const std::optional<Rat>& exact_square() const { return exact_sq_; }

  double upper_double() const;
  double lower_double() const;
  /// Decimal rendering of the upper bound, rounded up.
  std::string upper_string() const;

  /// Certified comparison for bound checks: true when v <= upper bound
  /// (exact comparison when the value is exactly known).
  bool at_least(const Rat& v) const;
  /// True when the upper bound is <= v (used by soundness tests).
  bool upper_at_most(const UpperReal& other) const;

  int precision() const { return prec_; }

 private:
  void set_exact(const Rat& v);
  void set_exact_sq(const Rat& sq);  // promotes perfect squares to exact values

  mpfr_t lo_, hi_;
  std::optional<Rat> exact_;
  std::optional<Rat> exact_sq_;
  int prec_;
};

}  // namespace wittkit
