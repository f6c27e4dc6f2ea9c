#include "wittkit/rational.hpp"

#include <stdexcept>

namespace wittkit {

Rat parse_rational(const std::string& text) {
  Rat q;
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

bool is_zero_vector(const Vec& x) {
  for (const Rat& c : x) {
    if (c != 0) return false;
  }
  return true;
}

void canonicalize_integer(std::vector<Int>& x) {
  Int g = 0;
  for (const Int& c : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw std::invalid_argument("zero vector has no primitive representative");
  for (Int& c : x) c /= g;
  for (const Int& c : x) {
    if (c != 0) {
      if (c < 0) {
        for (Int& d : x) d = -d;
      }
      break;
    }
  }
}

std::vector<Int> primitive_integer(const Vec& x) {
  Int lcm = 1;
  for (const Rat& c : x) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Int> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    out[i] = Int(x[i].get_num()) * (lcm / Int(x[i].get_den()));
  }
  canonicalize_integer(out);
  return out;
}

Int sup_norm(const std::vector<Int>& x) {
  Int m = 0;
  for (const Int& c : x) {
    Int a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

Vec to_rational(const std::vector<Int>& x) {
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = Rat(x[i]);
  return out;
}

std::optional<Rat> exact_sqrt(const Rat& value) {
  if (value < 0) return std::nullopt;
  if (value == 0) return Rat(0);
  Int num = value.get_num(), den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn) / Rat(rd);
}

}  // namespace wittkit
