#include "wittkit/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace wittkit {

namespace {

// Nearest integer to a rational, ties rounded up: floor(q + 1/2).
Int nearest_int(const Rat& q) {
  Int num = q.get_num() * 2 + q.get_den();
  Int den = q.get_den() * 2;
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

IMat integer_kernel(const IMat& a, size_t ncols) {
  size_t nrows = a.size();
  // Column-style echelon reduction of a working copy, tracking the
  // unimodular column transform in u.
  IMat w(nrows, IVec(ncols, Int(0)));
  for (size_t i = 0; i < nrows; ++i) {
    if (a[i].size() != ncols) throw std::invalid_argument("ragged integer matrix");
    w[i] = a[i];
  }
  IMat u(ncols, IVec(ncols, Int(0)));
  for (size_t j = 0; j < ncols; ++j) u[j][j] = 1;

  auto col_axpy = [&](size_t dst, size_t src, const Int& q) {
    // col_dst -= q * col_src
    for (size_t i = 0; i < nrows; ++i) w[i][dst] -= q * w[i][src];
    for (size_t i = 0; i < ncols; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](size_t j1, size_t j2) {
    for (size_t i = 0; i < nrows; ++i) std::swap(w[i][j1], w[i][j2]);
    for (size_t i = 0; i < ncols; ++i) std::swap(u[i][j1], u[i][j2]);
  };
  auto col_negate = [&](size_t j) {
    for (size_t i = 0; i < nrows; ++i) w[i][j] = -w[i][j];
    for (size_t i = 0; i < ncols; ++i) u[i][j] = -u[i][j];
  };

  size_t c = 0;
  for (size_t r = 0; r < nrows && c < ncols; ++r) {
    // Euclid across columns c..ncols-1 until at most one nonzero in row r.
    while (true) {
      size_t best = ncols;
      for (size_t j = c; j < ncols; ++j) {
        if (w[r][j] == 0) continue;
        if (best == ncols || mpz_cmpabs(w[r][j].get_mpz_t(), w[r][best].get_mpz_t()) < 0) best = j;
      }
      if (best == ncols) break;  // row r already zero on the tail
      bool others = false;
      for (size_t j = c; j < ncols; ++j) {
        if (j == best || w[r][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w[r][j].get_mpz_t(), w[r][best].get_mpz_t());
        col_axpy(j, best, q);
        if (w[r][j] != 0) others = true;
      }
      if (!others) {
        col_swap(c, best);
        if (w[r][c] < 0) col_negate(c);
        ++c;
        break;
      }
    }
  }

  IMat basis;  // columns
  for (size_t j = c; j < ncols; ++j) {
    IVec col(ncols);
    for (size_t i = 0; i < ncols; ++i) col[i] = u[i][j];
    basis.push_back(col);
  }
  return basis;
}

IMat saturation(const Subspace& v) {
  size_t n = v.ambient();
  size_t l = v.dim();
  if (l == 0) return {};
  if (l == n) {
    IMat cols(n, IVec(n, Int(0)));
    for (size_t j = 0; j < n; ++j) cols[j][j] = 1;
    return cols;
  }
  Mat ann = annihilator(v);  // (n-l) x n rational
  IMat rows;
  for (size_t i = 0; i < ann.rows(); ++i) {
    rows.push_back(primitive_integer(ann.row(i)));
  }
  IMat cols = integer_kernel(rows, n);
  if (cols.size() != l) throw std::logic_error("saturation rank mismatch");
  return cols;
}

IMat lll_reduce(const IMat& columns) {
  size_t m = columns.size();
  if (m <= 1) return columns;
  size_t n = columns[0].size();
  IMat b = columns;

  // Exact Gram-Schmidt data, recomputed from scratch after every change;
  // dimensions are small enough that this is cheap.
  std::vector<std::vector<Rat>> mu(m, std::vector<Rat>(m, Rat(0)));
  std::vector<Rat> norm_sq(m, Rat(0));
  auto dot = [&](const IVec& x, const IVec& y) {
    Int s = 0;
    for (size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return Rat(s);
  };
  auto recompute = [&]() {
    std::vector<Vec> star(m, Vec(n, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
      for (size_t k = 0; k < n; ++k) star[i][k] = Rat(b[i][k]);
      for (size_t j = 0; j < i; ++j) {
        Rat proj = 0;
        for (size_t k = 0; k < n; ++k) proj += Rat(b[i][k]) * star[j][k];
        mu[i][j] = norm_sq[j] == 0 ? Rat(0) : proj / norm_sq[j];
        for (size_t k = 0; k < n; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      Rat s = 0;
      for (size_t k = 0; k < n; ++k) s += star[i][k] * star[i][k];
      norm_sq[i] = s;
    }
    (void)dot;
  };

  const Rat delta = frac(99, 100);
  recompute();
  size_t k = 1;
  while (k < m) {
    for (size_t j = k; j-- > 0;) {
      Int r = nearest_int(mu[k][j]);
      if (r != 0) {
        for (size_t i = 0; i < n; ++i) b[k][i] -= r * b[j][i];
        recompute();
      }
    }
    if (norm_sq[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm_sq[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      recompute();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

Mat reduced_lattice_basis(const Subspace& v) {
  IMat cols = lll_reduce(saturation(v));
  std::vector<Vec> rat_cols;
  for (const IVec& c : cols) rat_cols.push_back(to_rational(c));
  if (rat_cols.empty()) return Mat(v.ambient(), 0);
  return Mat::from_columns(rat_cols);
}

namespace {

bool visit_shell_rec(std::vector<long>& digits, size_t pos, long shell, bool leading_zero,
                     bool has_extreme, const std::function<bool(const std::vector<long>&)>& visit) {
  size_t dim = digits.size();
  if (pos == dim) {
    long g = 0;
    for (long d : digits) g = std::gcd(g, d < 0 ? -d : d);
    if (g != 1) return true;
    return visit(digits);
  }
  // First nonzero digit must be positive; the last digit must realize the
  // shell when nothing before it did.
  long lo = leading_zero ? 0 : -shell;
  for (long v = shell; v >= lo; --v) {
    bool extreme = v == shell || v == -shell;
    if (pos + 1 == dim && !has_extreme && !extreme) {
      if (v > 0) {
        v = -shell + 1;  // skip straight to -shell (loop decrement lands there)
        continue;
      }
      break;
    }
    digits[pos] = v;
    if (!visit_shell_rec(digits, pos + 1, shell, leading_zero && v == 0, has_extreme || extreme,
                         visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool visit_canonical_shell(size_t dim, long shell,
                           const std::function<bool(const std::vector<long>&)>& visit) {
  if (dim == 0 || shell < 1) return true;
  std::vector<long> digits(dim, 0);
  return visit_shell_rec(digits, 0, shell, true, false, visit);
}

PrimitiveEnumerator::PrimitiveEnumerator(size_t dim) : dim_(dim), shell_(0), digits_(dim, 0), fresh_(false) {}

bool PrimitiveEnumerator::start_shell(long s) {
  shell_ = s;
  for (size_t i = 0; i < dim_; ++i) digits_[i] = s;
  fresh_ = true;
  return true;
}

bool PrimitiveEnumerator::advance_odometer() {
  // Digit order within a position: s, s-1, ..., -s; last position varies
  // fastest. Returns false when the shell is exhausted.
  for (size_t i = dim_; i-- > 0;) {
    if (digits_[i] > -shell_) {
      --digits_[i];
      for (size_t j = i + 1; j < dim_; ++j) digits_[j] = shell_;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<long>> PrimitiveEnumerator::next(long max_sup) {
  while (true) {
    if (shell_ == 0) {
      if (max_sup < 1) return std::nullopt;
      start_shell(1);
    } else if (!fresh_) {
      if (!advance_odometer()) {
        if (shell_ + 1 > max_sup) return std::nullopt;
        start_shell(shell_ + 1);
      }
    }
    fresh_ = false;

    // Keep only canonical vectors on the shell boundary.
    long sup = 0;
    for (long d : digits_) sup = std::max(sup, d < 0 ? -d : d);
    if (sup != shell_) continue;
    long lead = 0;
    for (long d : digits_) {
      if (d != 0) {
        lead = d;
        break;
      }
    }
    if (lead <= 0) continue;
    long g = 0;
    for (long d : digits_) g = std::gcd(g, d < 0 ? -d : d);
    if (g != 1) continue;
    return digits_;
  }
}

}  // namespace wittkit
