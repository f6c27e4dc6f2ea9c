#include "wittkit/places.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittkit {

Place Place::finite(const Int& p) {
  if (p < 2 || !is_prime(p)) {
    throw std::invalid_argument("finite place requires a prime, got " + p.get_str());
  }
  return Place{false, p};
}

namespace {

bool is_prime_ul(unsigned long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Int> prime_factors_ul(unsigned long m) {
  std::vector<Int> out;
  if (m % 2 == 0) {
    out.push_back(2);
    while (m % 2 == 0) m /= 2;
  }
  for (unsigned long d = 3; d * d <= m; d += 2) {
    if (m % d == 0) {
      out.push_back(static_cast<long>(d));
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(static_cast<long>(m));
  return out;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_ul(n.get_ui());
  if (n % 2 == 0) return false;
  Int d = 3;
  while (d * d <= n) {
    if (n % d == 0) return false;
    d += 2;
  }
  return true;
}

std::vector<Int> prime_factors(const Int& n) {
  if (n == 0) throw std::invalid_argument("zero has no prime factorization");
  Int m = abs(n);
  if (mpz_fits_ulong_p(m.get_mpz_t())) return prime_factors_ul(m.get_ui());
  std::vector<Int> out;
  if (m % 2 == 0) {
    out.push_back(2);
    while (m % 2 == 0) m /= 2;
  }
  Int d = 3;
  while (d * d <= m) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
    d += 2;
  }
  if (m > 1) out.push_back(m);
  return out;
}

long valuation(const Rat& a, const Int& p) {
  if (a == 0) throw std::invalid_argument("valuation of zero is undefined");
  Int tmp;
  unsigned long vn = mpz_remove(tmp.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  unsigned long vd = mpz_remove(tmp.get_mpz_t(), a.get_den_mpz_t(), p.get_mpz_t());
  return static_cast<long>(vn) - static_cast<long>(vd);
}

Rat absolute_value(const Rat& a, const Place& v) {
  if (a == 0) return Rat(0);
  if (v.archimedean) return abs(a);
  long ord = valuation(a, v.prime);
  Int pw;
  mpz_pow_ui(pw.get_mpz_t(), v.prime.get_mpz_t(), static_cast<unsigned long>(ord < 0 ? -ord : ord));
  return ord >= 0 ? Rat(1) / Rat(pw) : Rat(pw);
}

std::vector<Place> support(const Rat& a) {
  if (a == 0) throw std::invalid_argument("support of zero is undefined");
  std::vector<Int> primes = prime_factors(a.get_num());
  for (const Int& p : prime_factors(a.get_den())) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out;
  out.push_back(Place::infinite_place());
  for (const Int& p : primes) out.push_back(Place{false, p});
  return out;
}

Rat local_height(const Vec& x, const Place& v) {
  if (is_zero_vector(x)) throw std::invalid_argument("local height of the zero vector is undefined");
  Rat best = 0;
  for (const Rat& c : x) {
    Rat a = absolute_value(c, v);
    if (a > best) best = a;
  }
  return best;
}

Rat local_height_euclid_sq(const Vec& x) {
  if (is_zero_vector(x)) throw std::invalid_argument("local height of the zero vector is undefined");
  Rat s = 0;
  for (const Rat& c : x) s += c * c;
  return s;
}

}  // namespace wittkit
