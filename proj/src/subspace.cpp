#include "wittkit/subspace.hpp"

#include <stdexcept>

namespace wittkit {

Subspace::Subspace(size_t ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {
  if (basis_.cols() > 0 && basis_.rows() != ambient_) {
    throw std::invalid_argument("basis row count does not match ambient dimension");
  }
  if (basis_.cols() > ambient_) throw std::invalid_argument("more basis vectors than ambient dimension");
  if (rank(basis_) != basis_.cols()) throw std::invalid_argument("basis is rank deficient");
  if (basis_.cols() == 0) {
    basis_ = Mat(ambient_, 0);
    grassmann_ = {Int(1)};
    return;
  }
  std::vector<Rat> minors = maximal_minors(basis_);
  grassmann_ = primitive_integer(minors);
}

Subspace Subspace::full(size_t ambient) { return Subspace(ambient, Mat::identity(ambient)); }

Subspace Subspace::zero(size_t ambient) { return Subspace(ambient, Mat(ambient, 0)); }

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& generators) {
  std::vector<Vec> nonzero;
  for (const Vec& g : generators) {
    if (g.size() != ambient) throw std::invalid_argument("generator has wrong dimension");
    if (!is_zero_vector(g)) nonzero.push_back(g);
  }
  std::vector<size_t> keep = independent_subset(nonzero);
  std::vector<Vec> basis;
  for (size_t i : keep) basis.push_back(nonzero[i]);
  if (basis.empty()) return Subspace::zero(ambient);
  return Subspace(ambient, Mat::from_columns(basis));
}

Rat Subspace::height_sq() const {
  Rat s = 0;
  for (const Int& c : grassmann_) s += Rat(c) * Rat(c);
  return s;
}

bool Subspace::contains(const Vec& x) const {
  if (x.size() != ambient_) return false;
  if (is_zero_vector(x)) return true;
  if (dim() == 0) return false;
  std::vector<Vec> cols;
  for (size_t j = 0; j < basis_.cols(); ++j) cols.push_back(basis_.column(j));
  cols.push_back(x);
  return rank(Mat::from_columns(cols)) == dim();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  Mat stacked(n, a.dim() + b.dim());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < a.dim(); ++j) stacked.at(i, j) = a.basis().at(i, j);
    for (size_t j = 0; j < b.dim(); ++j) stacked.at(i, a.dim() + j) = b.basis().at(i, j);
  }
  Mat null = kernel(stacked);
  std::vector<Vec> gens;
  for (size_t k = 0; k < null.cols(); ++k) {
    Vec coeff_a(a.dim());
    for (size_t j = 0; j < a.dim(); ++j) coeff_a[j] = null.at(j, k);
    gens.push_back(a.basis().apply(coeff_a));
  }
  return Subspace::span(n, gens);
}

size_t intersection_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return 0;
  Mat stacked(n, a.dim() + b.dim());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < a.dim(); ++j) stacked.at(i, j) = a.basis().at(i, j);
    for (size_t j = 0; j < b.dim(); ++j) stacked.at(i, a.dim() + j) = b.basis().at(i, j);
  }
  return a.dim() + b.dim() - rank(stacked);
}

Mat annihilator(const Subspace& v) {
  if (v.dim() >= v.ambient()) throw std::invalid_argument("full space has no nontrivial annihilator");
  Mat bt = v.basis().transpose();  // L x N
  Mat null = kernel(bt);           // N x (N-L)
  return null.transpose();         // (N-L) x N
}

}  // namespace wittkit
