#include "wittkit/smallbasis.hpp"

#include <algorithm>
#include <map>

#include "wittkit/heights.hpp"
#include "wittkit/lattice.hpp"

namespace wittkit {

namespace {

// Ambient ordering: increasing sup-norm, then increasing Euclidean norm
// (so sparse vectors precede combinations), then descending lexicographic.
bool ambient_order_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int sa = sup_norm(a), sb = sup_norm(b);
  if (sa != sb) return sa < sb;
  Int ea = 0, eb = 0;
  for (const Int& c : a) ea += c * c;
  for (const Int& c : b) eb += c * c;
  if (ea != eb) return ea < eb;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// Streams the primitive vectors of the lattice spanned by `basis` in ambient
// order. Coefficient shells are enumerated far enough ahead (via the dual
// row norms) that each ambient shell is complete before it is handed out.
class AmbientEnumerator {
 public:
  explicit AmbientEnumerator(const Mat& basis)
      : basis_(basis), coeff_enum_(basis.cols()), coeff_covered_(0), ambient_shell_(0) {
    // c = D x with D the left inverse of the basis, so |c_i| <= t * ||D_i||_1
    // for any lattice vector of ambient sup-norm t.
    Mat bt = basis.transpose();
    Mat gram = bt * basis;
    Mat inv = invert(gram);
    Mat dual = inv * bt;
    Rat worst = 0;
    for (size_t i = 0; i < dual.rows(); ++i) {
      Rat row = 0;
      for (size_t j = 0; j < dual.cols(); ++j) row += abs(dual.at(i, j));
      if (row > worst) worst = row;
    }
    stretch_ = worst;
  }

  // Next vector with ambient sup-norm <= cutoff, or nullopt.
  std::optional<std::vector<Int>> next(long cutoff) {
    while (true) {
      if (!buffer_.empty()) {
        auto it = buffer_.begin();
        if (it->first <= ambient_shell_) {
          if (it->first != sorted_key_) {
            // A bucket is complete before its shell is reached; sort it once,
            // reversed so pop_back emits in enumeration order.
            std::sort(it->second.begin(), it->second.end(), ambient_order_less);
            std::reverse(it->second.begin(), it->second.end());
            sorted_key_ = it->first;
          }
          std::vector<Int> out = it->second.back();
          it->second.pop_back();
          if (it->second.empty()) buffer_.erase(it);
          return out;
        }
      }
      if (ambient_shell_ >= cutoff) return std::nullopt;
      ++ambient_shell_;
      cover(ambient_shell_);
    }
  }

 private:
  static Mat invert(const Mat& m) {
    size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
      aug.at(i, n + i) = 1;
    }
    if (rref(aug).size() != n) throw std::logic_error("singular Gram matrix in lattice dual");
    Mat inv(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
  }

  void cover(long ambient_t) {
    // advance coefficient coverage far enough that shell ambient_t is complete
    Rat need = stretch_ * ambient_t;
    long coeff_target = static_cast<long>(mpz_class(need.get_num() / need.get_den()).get_si()) + 1;
    while (coeff_covered_ < coeff_target) {
      ++coeff_covered_;
      while (true) {
        std::optional<std::vector<long>> c = coeff_enum_.next(coeff_covered_);
        if (!c) break;
        Vec coeff(c->size());
        for (size_t i = 0; i < c->size(); ++i) coeff[i] = Rat((*c)[i]);
        Vec w = basis_.apply(coeff);
        std::vector<Int> wi(w.size());
        for (size_t i = 0; i < w.size(); ++i) wi[i] = w[i].get_num();
        canonicalize_integer(wi);
        long s = static_cast<long>(sup_norm(wi).get_si());
        buffer_[s].push_back(wi);
      }
    }
  }

  Mat basis_;
  PrimitiveEnumerator coeff_enum_;
  long coeff_covered_;
  long ambient_shell_;
  long sorted_key_ = -1;
  Rat stretch_;
  std::map<long, std::vector<std::vector<Int>>> buffer_;
};

Int int_det(const std::vector<std::vector<Int>>& cols) {
  size_t n = cols.size();
  Mat m(n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) m.at(i, j) = Rat(cols[j][i]);
  Rat d = determinant(m);
  return d.get_num();
}

// gcd of all j x j minors of the coefficient matrix formed by the chosen
// columns; a partial set extends to a lattice basis iff this is 1.
Int minor_gcd(const std::vector<std::vector<Int>>& cols) {
  size_t rows = cols[0].size();
  size_t j = cols.size();
  Int g = 0;
  std::vector<size_t> idx(j);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (g == 1) return;
    if (pos == j) {
      std::vector<std::vector<Int>> sub(j, std::vector<Int>(j));
      for (size_t c = 0; c < j; ++c)
        for (size_t r = 0; r < j; ++r) sub[c][r] = cols[c][idx[r]];
      Int d = int_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (size_t i = start; i + (j - pos) <= rows; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return g;
}

// Exact coefficients of an integer lattice vector w.r.t. the given basis.
std::vector<Int> lattice_coords(const Mat& basis, const std::vector<Int>& w) {
  size_t n = basis.rows(), m = basis.cols();
  Mat aug(n, m + 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) aug.at(i, j) = basis.at(i, j);
    aug.at(i, m) = Rat(w[i]);
  }
  Mat red = aug;
  std::vector<size_t> pivots = rref(red);
  std::vector<Int> coords(m, Int(0));
  for (size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] >= m) throw std::logic_error("vector outside lattice span");
    Rat c = red.at(k, m);
    if (c.get_den() != 1) throw std::logic_error("non-integer lattice coordinates");
    coords[pivots[k]] = c.get_num();
  }
  return coords;
}

}  // namespace

SmallBasis small_basis(const Subspace& u, long cutoff) {
  if (u.dim() < 1) throw std::invalid_argument("small_basis requires a nonzero subspace");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  size_t j = u.dim();
  Mat lattice = reduced_lattice_basis(u);

  // The reduced basis vectors are themselves lattice vectors, so enumeration
  // up to their sup-norm always completes the independent set; the caller's
  // cutoff only ever widens the radius.
  Int basis_sup = 0;
  for (size_t c = 0; c < lattice.cols(); ++c) {
    std::vector<Int> col(lattice.rows());
    for (size_t i = 0; i < lattice.rows(); ++i) col[i] = lattice.at(i, c).get_num();
    Int s = sup_norm(col);
    if (s > basis_sup) basis_sup = s;
  }
  long floor_cutoff = static_cast<long>(basis_sup.get_si());
  long eff_cutoff = std::max(cutoff, floor_cutoff);

  // Single enumeration pass feeding two greedy selections: free independence
  // (successive minima) and basis-extendability (gcd of maximal minors = 1).
  std::vector<std::vector<Int>> minima, minima_coords;
  std::vector<std::vector<Int>> basis_pick, basis_coords;
  AmbientEnumerator en(lattice);
  while (minima.size() < j || basis_pick.size() < j) {
    std::optional<std::vector<Int>> w = en.next(eff_cutoff);
    if (!w) {
      if (minima.size() < j) {
        throw CutoffExceeded("small-basis enumeration exhausted at cutoff " + std::to_string(eff_cutoff));
      }
      break;  // minima complete; the basis pass just gives up
    }
    std::vector<Int> coords = lattice_coords(lattice, *w);

    if (minima.size() < j) {
      std::vector<Vec> test;
      for (const auto& c : minima_coords) test.push_back(to_rational(c));
      test.push_back(to_rational(coords));
      if (rank(Mat::from_columns(test)) == test.size()) {
        minima.push_back(*w);
        minima_coords.push_back(coords);
      }
    }
    if (basis_pick.size() < j) {
      std::vector<std::vector<Int>> trial = basis_coords;
      trial.push_back(coords);
      std::vector<Vec> test;
      for (const auto& c : trial) test.push_back(to_rational(c));
      if (rank(Mat::from_columns(test)) == trial.size() && minor_gcd(trial) == 1) {
        basis_pick.push_back(*w);
        basis_coords.push_back(coords);
      }
    }
  }

  Rat target_sq = u.height_sq();
  auto product_of = [](const std::vector<std::vector<Int>>& vs) {
    Rat p = 1;
    for (const auto& v : vs) p *= Rat(sup_norm(v));
    return p;
  };
  Rat basis_product = basis_pick.size() == j ? product_of(basis_pick) : Rat(-1);
  Rat minima_product = product_of(minima);

  SmallBasis out;
  out.target_sq = target_sq;
  if (basis_pick.size() == j && basis_product * basis_product <= target_sq) {
    out.lattice_basis = true;
    out.height_product = basis_product;
    for (const auto& v : basis_pick) out.vectors.push_back(to_rational(v));
  } else {
    // The minima always satisfy the bound; a failure here would be a defect.
    if (minima_product * minima_product > target_sq) {
      throw std::logic_error("height-product bound violated by successive minima");
    }
    out.lattice_basis = false;
    out.height_product = minima_product;
    for (const auto& v : minima) out.vectors.push_back(to_rational(v));
  }
  std::stable_sort(out.vectors.begin(), out.vectors.end(), [](const Vec& a, const Vec& b) {
    return inhom_value(a) < inhom_value(b);
  });
  return out;
}

Subspace radical_complement(const QuadraticSpace& q) {
  Subspace rad = radical(q);
  size_t l = q.space.dim();
  if (rad.dim() >= l) throw std::invalid_argument("the form vanishes on the space; no regular complement");
  size_t want = l - rad.dim();

  Mat lattice = reduced_lattice_basis(q.space);
  std::vector<Vec> rad_cols;
  for (size_t k = 0; k < rad.dim(); ++k) rad_cols.push_back(rad.basis().column(k));

  // The lattice basis vectors themselves appear within their own sup-norm,
  // so this always completes.
  Int basis_sup = 0;
  for (size_t c = 0; c < lattice.cols(); ++c) {
    for (size_t i = 0; i < lattice.rows(); ++i) {
      Int a = abs(Int(lattice.at(i, c).get_num()));
      if (a > basis_sup) basis_sup = a;
    }
  }
  long cutoff = static_cast<long>(basis_sup.get_si()) + 1;

  std::vector<Vec> picked;
  AmbientEnumerator en(lattice);
  while (picked.size() < want) {
    std::optional<std::vector<Int>> w = en.next(cutoff);
    if (!w) throw std::logic_error("radical complement enumeration exhausted");
    Vec wr = to_rational(*w);
    std::vector<Vec> test = rad_cols;
    for (const Vec& p : picked) test.push_back(p);
    test.push_back(wr);
    if (rank(Mat::from_columns(test)) == test.size()) {
      picked.push_back(wr);
    }
  }
  return Subspace(q.ambient(), Mat::from_columns(picked));
}

}  // namespace wittkit
