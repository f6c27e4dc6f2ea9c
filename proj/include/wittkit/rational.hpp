#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace wittkit {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

/// Canonical fraction. The two-argument mpq_class constructor does not
/// canonicalize, and GMP's rational arithmetic requires canonical operands;
/// construct fractions through this instead.
inline Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool is_zero_vector(const Vec& x);

/// Canonical projective representative: integer coordinates, content 1,
/// first nonzero coordinate positive. Input must be nonzero.
std::vector<Int> primitive_integer(const Vec& x);

/// Same canonicalization applied in place to an integer vector (nonzero).
void canonicalize_integer(std::vector<Int>& x);

Int sup_norm(const std::vector<Int>& x);

Vec to_rational(const std::vector<Int>& x);

/// Exact square root when the rational is a perfect square of a rational.
std::optional<Rat> exact_sqrt(const Rat& value);

}  // namespace wittkit
