#include "wittkit/quadspace.hpp"

#include <algorithm>

#include "wittkit/heights.hpp"
#include "wittkit/lattice.hpp"
#include "wittkit/smallbasis.hpp"

namespace wittkit {

QuadraticSpace::QuadraticSpace(Mat gram_matrix, Subspace subspace)
    : gram(std::move(gram_matrix)), space(std::move(subspace)) {
  if (gram.rows() != space.ambient() || gram.cols() != space.ambient()) {
    throw std::invalid_argument("Gram matrix size does not match ambient dimension");
  }
  if (!gram.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  if (gram.is_zero()) throw std::invalid_argument("the zero form is not a quadratic space");
}

QuadraticSpace QuadraticSpace::whole(Mat gram_matrix) {
  size_t n = gram_matrix.rows();
  return QuadraticSpace(std::move(gram_matrix), Subspace::full(n));
}

Rat QuadraticSpace::form(const Vec& x) const { return bilinear(x, x); }

Rat QuadraticSpace::bilinear(const Vec& x, const Vec& y) const {
  if (x.size() != ambient() || y.size() != ambient()) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) row += gram.at(i, j) * y[j];
    }
    s += x[i] * row;
  }
  return s;
}

Mat restrict_gram(const QuadraticSpace& q) { return restrict_gram(q, q.space.basis()); }

Mat restrict_gram(const QuadraticSpace& q, const Mat& basis) {
  return basis.transpose() * q.gram * basis;
}

Subspace radical(const QuadraticSpace& q) {
  if (q.space.dim() == 0) return Subspace::zero(q.ambient());
  Mat g = restrict_gram(q);
  Mat null = kernel(g);  // coefficient vectors
  std::vector<Vec> gens;
  for (size_t k = 0; k < null.cols(); ++k) gens.push_back(q.space.basis().apply(null.column(k)));
  return Subspace::span(q.ambient(), gens);
}

namespace {

// Enumeration-order comparison for canonical coefficient vectors: increasing
// sup-norm, then descending lexicographic (the shell order of
// PrimitiveEnumerator).
bool enum_order_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int sa = sup_norm(a), sb = sup_norm(b);
  if (sa != sb) return sa < sb;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Vec ambient_from_coeffs(const Mat& basis, const std::vector<Int>& c) {
  Vec coeff(c.size());
  for (size_t i = 0; i < c.size(); ++i) coeff[i] = Rat(c[i]);
  Vec w = basis.apply(coeff);
  return to_rational(primitive_integer(w));
}

// Isotropic lines of a binary form in closed form, as canonical primitive
// coefficient vectors. Empty when anisotropic.
std::vector<std::vector<Int>> binary_isotropic_lines(const Mat& g) {
  const Rat& a = g.at(0, 0);
  const Rat& b = g.at(0, 1);
  const Rat& c = g.at(1, 1);
  std::vector<Vec> lines;
  if (a == 0 && b == 0 && c == 0) {
    // Form vanishes identically; (1,1) is what the enumeration meets first.
    lines.push_back({Rat(1), Rat(1)});
  } else if (a == 0 && c == 0) {
    lines.push_back({Rat(1), Rat(0)});
    lines.push_back({Rat(0), Rat(1)});
  } else if (a == 0) {
    lines.push_back({Rat(1), Rat(0)});
    if (b != 0) lines.push_back({-c, 2 * b});
  } else {
    Rat disc = b * b - a * c;
    if (std::optional<Rat> root = exact_sqrt(disc)) {
      lines.push_back({-b + *root, a});
      if (*root != 0) lines.push_back({-b - *root, a});
    }
  }
  std::vector<std::vector<Int>> out;
  for (const Vec& l : lines) out.push_back(primitive_integer(l));
  std::sort(out.begin(), out.end(), enum_order_less);
  return out;
}

}  // namespace

std::optional<Vec> find_isotropic(const QuadraticSpace& q, const Subspace& region, long bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
  size_t m = region.dim();
  if (m == 0) return std::nullopt;
  if (q.space.dim() < q.ambient()) {
    for (size_t j = 0; j < m; ++j) {
      if (!q.space.contains(region.basis().column(j))) {
        throw std::invalid_argument("search region not contained in the space");
      }
    }
  }
  Mat basis = reduced_lattice_basis(region);
  Mat g = restrict_gram(q, basis);

  if (m == 1) {
    if (g.at(0, 0) != 0) return std::nullopt;
    return ambient_from_coeffs(basis, {Int(1)});
  }
  if (m == 2) {
    // Closed form; returns what the enumeration would find first.
    std::vector<std::vector<Int>> lines = binary_isotropic_lines(g);
    if (lines.empty()) return std::nullopt;
    if (sup_norm(lines.front()) > bound) return std::nullopt;
    return ambient_from_coeffs(basis, lines.front());
  }

  // Scale the restricted Gram to integers once; scaling preserves the zero set.
  Int lcm = 1;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g.at(i, j).get_den_mpz_t());
  std::vector<std::vector<Int>> gi(m, std::vector<Int>(m));
  Int max_entry = 0;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      gi[i][j] = Int(g.at(i, j).get_num()) * (lcm / Int(g.at(i, j).get_den()));
      if (mpz_cmpabs(gi[i][j].get_mpz_t(), max_entry.get_mpz_t()) > 0) max_entry = abs(gi[i][j]);
    }
  }

  // Machine-word evaluation is safe when m^2 * max|G| * bound^2 stays well
  // below 2^63; otherwise fall back to exact bignum evaluation.
  bool narrow = false;
  std::vector<std::vector<long long>> gl;
  {
    Int budget = Int(1);
    budget <<= 62;
    Int need = max_entry * static_cast<long>(m * m) * bound * bound;
    if (need < budget && mpz_fits_slong_p(max_entry.get_mpz_t())) {
      narrow = true;
      gl.assign(m, std::vector<long long>(m));
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) gl[i][j] = gi[i][j].get_si();
    }
  }

  std::optional<Vec> found;
  std::vector<Int> ci(m);
  for (long shell = 1; shell <= bound && !found; ++shell) {
    visit_canonical_shell(m, shell, [&](const std::vector<long>& c) {
      if (narrow) {
        long long val = 0;
        for (size_t i = 0; i < m; ++i) {
          if (c[i] == 0) continue;
          val += gl[i][i] * c[i] * c[i];
          for (size_t j = i + 1; j < m; ++j) {
            if (c[j] != 0) val += 2 * gl[i][j] * c[i] * c[j];
          }
        }
        if (val != 0) return true;
      }
      for (size_t i = 0; i < m; ++i) ci[i] = c[i];
      Int val = 0;
      for (size_t i = 0; i < m; ++i) {
        if (ci[i] == 0) continue;
        val += gi[i][i] * ci[i] * ci[i];
        for (size_t j = i + 1; j < m; ++j) {
          if (ci[j] != 0) val += 2 * gi[i][j] * ci[i] * ci[j];
        }
      }
      if (val == 0) {
        found = ambient_from_coeffs(basis, ci);
        return false;
      }
      return true;
    });
  }
  return found;
}

Vec complete_hyperbolic_pair(const QuadraticSpace& q, const Vec& x, const Subspace& region, long shells) {
  if (q.form(x) != 0 || is_zero_vector(x)) {
    throw std::invalid_argument("hyperbolic completion requires a nonzero isotropic vector");
  }
  if (!region.contains(x)) throw std::invalid_argument("vector lies outside the region");
  Mat basis = reduced_lattice_basis(region);
  size_t m = region.dim();

  bool pairing_exists = false;
  for (size_t j = 0; j < m; ++j) {
    if (q.bilinear(x, basis.column(j)) != 0) {
      pairing_exists = true;
      break;
    }
  }
  if (!pairing_exists) {
    throw std::invalid_argument("vector lies in the radical of the region; no hyperbolic partner");
  }

  // Squared height of span{x, y}: the primitive wedge of the two vectors.
  auto plane_height_sq = [&](const Vec& y) {
    std::vector<Rat> wedge;
    size_t n = x.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) wedge.push_back(x[i] * y[j] - x[j] * y[i]);
    std::vector<Int> prim = primitive_integer(wedge);
    Rat s = 0;
    for (const Int& c : prim) s += Rat(c) * Rat(c);
    return s;
  };

  std::optional<Vec> best;
  Rat best_h_sq;    // h(y)^2
  Rat best_plane_sq;
  PrimitiveEnumerator en(m);
  while (std::optional<std::vector<long>> c = en.next(shells)) {
    Vec coeff(m);
    for (size_t i = 0; i < m; ++i) coeff[i] = Rat((*c)[i]);
    Vec v = basis.apply(coeff);
    Rat pairing = q.bilinear(x, v);
    if (pairing == 0) continue;
    Rat scale = q.form(v) / (2 * pairing);
    Vec y(v.size());
    for (size_t i = 0; i < v.size(); ++i) y[i] = v[i] - scale * x[i];
    Vec y_prim = to_rational(primitive_integer(y));
    Rat h = inhom_value(y_prim);
    Rat h_sq = h * h;
    if (best && h_sq > best_h_sq) continue;
    Rat plane_sq = plane_height_sq(y_prim);
    if (!best || h_sq < best_h_sq || (h_sq == best_h_sq && plane_sq < best_plane_sq)) {
      best = y_prim;
      best_h_sq = h_sq;
      best_plane_sq = plane_sq;
    }
  }
  return *best;
}

Subspace orthogonal_complement(const QuadraticSpace& q, const Subspace& inner, const Subspace& outer) {
  if (inner.ambient() != q.ambient() || outer.ambient() != q.ambient()) {
    throw std::invalid_argument("ambient dimension mismatch");
  }
  for (size_t j = 0; j < inner.dim(); ++j) {
    if (!outer.contains(inner.basis().column(j))) {
      throw std::invalid_argument("inner subspace not contained in outer");
    }
  }
  if (inner.dim() == 0) return outer;
  Mat cross = inner.basis().transpose() * q.gram * outer.basis();  // dim(S) x dim(W)
  if (rank(restrict_gram(q, inner.basis())) != inner.dim()) {
    throw std::invalid_argument("form is degenerate on the inner subspace");
  }
  Mat null = kernel(cross);
  std::vector<Vec> gens;
  for (size_t k = 0; k < null.cols(); ++k) gens.push_back(outer.basis().apply(null.column(k)));
  Subspace out = Subspace::span(q.ambient(), gens);
  if (out.dim() != outer.dim() - inner.dim()) throw std::logic_error("orthogonal complement dimension mismatch");
  return out;
}

std::string to_string(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::Definite: return "definite";
    case Certificate::Kind::Dim1: return "dim1-nonzero";
    case Certificate::Kind::Dim2NonSquare: return "dim2-nonsquare";
    case Certificate::Kind::SearchedUpTo: return "searched-up-to";
    case Certificate::Kind::Contradiction: return "contradiction";
  }
  return "unknown";
}

namespace {

// Sylvester test on leading principal minors; exact.
bool is_definite(const Mat& g) {
  size_t n = g.rows();
  if (n == 0) return true;
  int sign = g.at(0, 0) > 0 ? 1 : (g.at(0, 0) < 0 ? -1 : 0);
  if (sign == 0) return false;
  for (size_t k = 1; k <= n; ++k) {
    Mat lead(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead.at(i, j) = g.at(i, j);
    Rat d = determinant(lead);
    Rat expected_sign = (sign < 0 && k % 2 == 1) ? Rat(-1) : Rat(1);
    if (d * expected_sign <= 0) return false;
  }
  return true;
}

// Exact certificates that need no search; nullopt when only a search can
// decide or when the space is provably isotropic.
std::optional<Certificate> cheap_certificate(const Mat& g) {
  size_t m = g.rows();
  if (m == 0) return Certificate{Certificate::Kind::Definite, 0, "empty component"};
  if (m == 1) {
    if (g.at(0, 0) != 0) return Certificate{Certificate::Kind::Dim1, 0, "nonzero one-dimensional form"};
    return std::nullopt;
  }
  if (is_definite(g)) {
    bool positive = g.at(0, 0) > 0;
    return Certificate{Certificate::Kind::Definite, 0, positive ? "positive definite" : "negative definite"};
  }
  Rat det = determinant(g);
  if (m == 2 && det != 0) {
    Rat neg_det = -det;
    if (!exact_sqrt(neg_det)) {
      return Certificate{Certificate::Kind::Dim2NonSquare, 0,
                         "-det = " + rat_to_string(neg_det) + " is not a rational square"};
    }
  }
  return std::nullopt;
}

long effective_bound(size_t dim, long bound, const SearchOptions& opts) {
  if (dim == 3) return std::min(bound, opts.dim3_cap);
  if (dim == 4) return std::min(bound, opts.dim4_cap);
  return bound;
}

}  // namespace

Certificate certify_anisotropy(const QuadraticSpace& q, const Subspace& u, long bound) {
  Mat basis = reduced_lattice_basis(u);
  Mat g = restrict_gram(q, basis);
  size_t m = u.dim();
  if (std::optional<Certificate> cert = cheap_certificate(g)) return *cert;
  if (m >= 1 && determinant(g) == 0) {
    return Certificate{Certificate::Kind::Contradiction, 0,
                       "degenerate restriction: radical vectors are isotropic"};
  }
  if (m <= 2) {
    // Nondegenerate, not definite, and (for m = 2) -det is a square: isotropic.
    return Certificate{Certificate::Kind::Contradiction, 0, "binary form with square -det is isotropic"};
  }
  if (m <= 4) {
    if (find_isotropic(q, u, bound)) {
      return Certificate{Certificate::Kind::Contradiction, bound, "isotropic vector found by search"};
    }
    return Certificate{Certificate::Kind::SearchedUpTo, bound,
                       "no isotropic vector with coefficient sup-norm <= " + std::to_string(bound)};
  }
  return Certificate{Certificate::Kind::Contradiction, 0,
                     "indefinite form of dimension >= 5 is isotropic"};
}

Subspace WittDecomposition::plane(size_t i) const {
  const HyperbolicPair& p = pairs.at(i);
  return Subspace::span(p.x.size(), {p.x, p.y});
}

WittDecomposition witt_decompose(const QuadraticSpace& q, const SearchOptions& opts) {
  if (opts.search_bound < 1) throw std::invalid_argument("search bound must be >= 1");
  size_t n = q.ambient();
  WittDecomposition out{Subspace::zero(n), {}, {}, Subspace::zero(n), Certificate{}, opts.search_bound};

  out.radical = radical(q);
  size_t l = q.space.dim();
  if (out.radical.dim() == l) {
    out.certificate = Certificate{Certificate::Kind::Definite, 0, "form vanishes on the space"};
    return out;
  }

  long bound = opts.search_bound;
  for (int attempt = 0;; ++attempt) {
    out.pairs.clear();
    Subspace residue = radical_complement(q);
    std::optional<Certificate> cert;
    while (true) {
      if (residue.dim() == 0) {
        cert = Certificate{Certificate::Kind::Definite, 0, "empty component"};
        break;
      }
      Mat g = restrict_gram(q, reduced_lattice_basis(residue));
      if (std::optional<Certificate> cheap = cheap_certificate(g)) {
        cert = cheap;
        break;
      }
      long eff = effective_bound(residue.dim(), bound, opts);
      std::optional<Vec> x = find_isotropic(q, residue, eff);
      if (x) {
        Vec y = complete_hyperbolic_pair(q, *x, residue, opts.pair_search_shells);
        HyperbolicPair pair{*x, y};
        if (inhom_value(pair.y) < inhom_value(pair.x)) std::swap(pair.x, pair.y);
        Subspace plane = Subspace::span(n, {pair.x, pair.y});
        residue = orthogonal_complement(q, plane, residue);
        out.pairs.push_back(std::move(pair));
        continue;
      }
      if (residue.dim() <= 4) {
        cert = Certificate{Certificate::Kind::SearchedUpTo, eff,
                           "no isotropic vector with coefficient sup-norm <= " + std::to_string(eff)};
        break;
      }
      break;  // dimension >= 5 with nothing found: the bound was too small
    }
    if (cert) {
      out.anisotropic_space = residue;
      out.certificate = *cert;
      out.search_bound_used = bound;
      break;
    }
    if (attempt >= opts.contradiction_retries) {
      throw CertificationError("isotropic vector must exist but was not found; raise the search bound");
    }
    bound *= 10;
  }

  if (out.anisotropic_space.dim() > 0) {
    long cutoff = opts.basis_cutoff;
    for (int widen = 0;; ++widen) {
      try {
        SmallBasis sb = small_basis(out.anisotropic_space, cutoff);
        out.anisotropic = sb.vectors;
        break;
      } catch (const CutoffExceeded&) {
        if (widen >= 4) throw;
        cutoff *= 4;
      }
    }
  }

  if (out.radical_dim() + 2 * out.witt_index() + out.aniso_dim() != l) {
    throw std::logic_error("decomposition dimension bookkeeping failed");
  }
  return out;
}

DecompositionBounds check_decomposition_bounds(const WittDecomposition& w, const QuadraticSpace& q,
                                               const constants::FieldParams& params, int prec) {
  DecompositionBounds out;
  size_t n = q.ambient();
  int r = static_cast<int>(w.rank());
  int omega = static_cast<int>(w.witt_index());
  Rat hf = *matrix_height(q.gram).value;
  Rat hv_sq = q.space.height_sq();

  // Radical bound: H(rad)^2 <= B(r)^{2r} H(F)^r H(V)^2.
  {
    BoundCheck check;
    check.lhs_sq = w.radical.height_sq();
    if (r == 0) {
      check.rhs_sq = UpperReal::from_rat(hv_sq, prec);
    } else {
      check.rhs_sq = constants::const_B(r, params, prec).pow(Rat(2 * r)) *
                     UpperReal::from_rat(hf, prec).pow(Rat(r)) * UpperReal::from_rat(hv_sq, prec);
    }
    check.pass = check.rhs_sq.at_least(check.lhs_sq);
    out.radical_bound = check;
  }

  // Component bound: max over planes and the anisotropic part.
  if (omega >= 1) {
    Rat lhs = w.anisotropic_space.dim() > 0 ? w.anisotropic_space.height_sq() : Rat(0);
    for (size_t i = 0; i < w.pairs.size(); ++i) {
      Rat p = w.plane(i).height_sq();
      if (p > lhs) lhs = p;
    }
    BoundCheck check;
    check.lhs_sq = lhs;
    int l = static_cast<int>(q.space.dim());
    UpperReal gsq = constants::script_G(static_cast<int>(n), l, omega, params, prec).pow(Rat(2));
    UpperReal inner = UpperReal::from_rat(hf, prec).pow(frac(2 * omega + r, 2)) *
                      UpperReal::from_rat(hv_sq, prec);
    int e = (omega + 1) * (omega + 2) / 2;
    check.rhs_sq = gsq * inner.pow(Rat(e));
    check.pass = check.rhs_sq.at_least(check.lhs_sq);
    out.component_bound = check;
  }

  // Per-plane pair bounds; exact rational comparisons over Q.
  UpperReal b1_sq = constants::const_B(1, params, prec).pow(Rat(2));
  UpperReal g_const = constants::const_G(params, prec);
  for (const HyperbolicPair& pair : w.pairs) {
    Rat plane_sq = Subspace::span(n, {pair.x, pair.y}).height_sq();
    Rat hx = inhom_value(pair.x);
    Rat hy = inhom_value(pair.y);

    BoundCheck xb;
    xb.lhs_sq = hx * hx;
    xb.rhs_sq = UpperReal::from_rat(Rat(8), prec) * b1_sq.pow(Rat(2)) *
                UpperReal::from_rat(hf * plane_sq, prec);
    xb.pass = xb.rhs_sq.at_least(xb.lhs_sq);

    BoundCheck yb;
    yb.lhs_sq = hy * hy;
    Rat n4 = Rat(Int(n) * Int(n) * Int(n) * Int(n));
    yb.rhs_sq = UpperReal::from_rat(Rat(1152) * n4, prec) *
                (b1_sq * g_const.pow(Rat(2))).pow(Rat(2)) *
                UpperReal::from_rat(hf * hf * hf * plane_sq * plane_sq * plane_sq, prec);
    yb.pass = yb.rhs_sq.at_least(yb.lhs_sq);

    out.pair_bounds.emplace_back(xb, yb);
  }

  out.all_pass = out.radical_bound.pass;
  if (out.component_bound && !out.component_bound->pass) out.all_pass = false;
  for (const auto& [xb, yb] : out.pair_bounds) {
    if (!xb.pass || !yb.pass) out.all_pass = false;
  }
  return out;
}

}  // namespace wittkit
