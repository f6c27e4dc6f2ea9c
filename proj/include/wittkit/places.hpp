#pragma once

#include <vector>

#include "wittkit/rational.hpp"

namespace wittkit {

/// A place of Q: the archimedean absolute value or a p-adic one.
struct Place {
  bool archimedean = true;
  Int prime = 0;  // set when finite

  static Place infinite_place() { return Place{true, Int(0)}; }
  static Place finite(const Int& p);  // validates primality

  bool operator==(const Place& rhs) const {
    return archimedean == rhs.archimedean && prime == rhs.prime;
  }
};

/// Deterministic primality test by trial division (adequate for the integer
/// sizes this library works with).
bool is_prime(const Int& n);

/// Distinct prime factors of |n|, ascending. n must be nonzero.
std::vector<Int> prime_factors(const Int& n);

/// p-adic valuation of a nonzero rational.
long valuation(const Rat& a, const Int& p);

/// |a|_v; |0|_v = 0. Exact rational for every place of Q.
Rat absolute_value(const Rat& a, const Place& v);

/// The archimedean place plus every finite place where |a|_v != 1.
/// Rejects a = 0.
std::vector<Place> support(const Rat& a);

/// Local height max_i |x_i|_v of a nonzero vector.
Rat local_height(const Vec& x, const Place& v);

/// Squared Euclidean local height at the archimedean place.
Rat local_height_euclid_sq(const Vec& x);

}  // namespace wittkit
