#include "wittkit/heights.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace wittkit {

namespace {

double upper_double_of_sqrt(const Rat& sq) {
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_q(t, sq.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(t, t, MPFR_RNDU);
  double d = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return d;
}

double upper_double_of_rat(const Rat& v) {
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_q(t, v.get_mpq_t(), MPFR_RNDU);
  double d = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return d;
}

}  // namespace

HeightValue height_from_value(const Rat& v) {
  if (v < 0) throw std::invalid_argument("height value must be nonnegative");
  return HeightValue{v * v, v, upper_double_of_rat(v)};
}

HeightValue height_from_square(const Rat& sq) {
  if (sq < 0) throw std::invalid_argument("height square must be nonnegative");
  HeightValue h;
  h.square = sq;
  h.value = exact_sqrt(sq);
  h.upper = upper_double_of_sqrt(sq);
  return h;
}

HeightValue sup_height(const Vec& x) {
  if (is_zero_vector(x)) throw std::invalid_argument("height of the zero vector is undefined");
  std::vector<Int> p = primitive_integer(x);
  return height_from_value(Rat(sup_norm(p)));
}

HeightValue sup_height_via_places(const Vec& x) {
  if (is_zero_vector(x)) throw std::invalid_argument("height of the zero vector is undefined");
  // Collect every finite place touching any coordinate, then take the literal
  // product of local heights, archimedean included.
  std::vector<Int> primes;
  for (const Rat& c : x) {
    if (c == 0) continue;
    for (const Int& p : prime_factors(c.get_num())) primes.push_back(p);
    for (const Int& p : prime_factors(c.get_den())) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  Rat product = local_height(x, Place::infinite_place());
  for (const Int& p : primes) {
    product *= local_height(x, Place{false, p});
  }
  return height_from_value(product);
}

HeightValue euclidean_height(const Vec& x) {
  if (is_zero_vector(x)) throw std::invalid_argument("height of the zero vector is undefined");
  std::vector<Int> p = primitive_integer(x);
  Rat sq = 0;
  for (const Int& c : p) sq += Rat(c) * Rat(c);
  return height_from_square(sq);
}

HeightValue inhomogeneous_height(const Vec& x) {
  Vec augmented;
  augmented.reserve(x.size() + 1);
  augmented.push_back(Rat(1));
  for (const Rat& c : x) augmented.push_back(c);
  return sup_height(augmented);
}

Rat inhom_value(const Vec& x) { return *inhomogeneous_height(x).value; }

HeightValue matrix_height(const Mat& m) {
  if (m.is_zero()) throw std::invalid_argument("height of the zero matrix is undefined");
  return sup_height(m.flatten());
}

HeightValue rowspan_height(const Mat& m) {
  Mat t = m.transpose();
  if (rank(t) != t.cols()) throw std::invalid_argument("rowspan height requires full row rank");
  std::vector<Rat> minors = maximal_minors(t);
  return euclidean_height(minors);
}

HeightValue subspace_height(const Subspace& v) {
  return height_from_square(v.height_sq());
}

bool duality_holds(const Subspace& v) {
  if (v.dim() == 0 || v.dim() >= v.ambient()) {
    throw std::invalid_argument("duality check requires 1 <= dim < ambient");
  }
  HeightValue primal = euclidean_height(maximal_minors(v.basis()));
  Mat a = annihilator(v);
  HeightValue dual = rowspan_height(a);
  return primal.square == dual.square;
}

}  // namespace wittkit
