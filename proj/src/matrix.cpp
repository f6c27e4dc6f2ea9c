#include "wittkit/matrix.hpp"

#include <functional>
#include <stdexcept>

namespace wittkit {

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat(0, 0);
  size_t n = cols[0].size();
  Mat m(n, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw std::invalid_argument("ragged column list");
    for (size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::column(size_t j) const {
  Vec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Mat::row(size_t i) const {
  Vec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  Mat out(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

Vec Mat::apply(const Vec& x) const {
  if (cols_ != x.size()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  Vec out(rows_, Rat(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * x[j];
  return out;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const Rat& c : a_)
    if (c != 0) return false;
  return true;
}

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    Rat inv = Rat(1) / m.at(r, c);
    for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(const Mat& m) {
  Mat c = m;
  return rref(c).size();
}

Mat kernel(const Mat& m) {
  Mat red = m;
  std::vector<size_t> pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), Rat(0));
    v[c] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -red.at(k, c);
    }
    basis.push_back(v);
  }
  if (basis.empty()) return Mat(m.cols(), 0);
  return Mat::from_columns(basis);
}

Rat determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Mat a = m;
  size_t n = a.rows();
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Rat inv = Rat(1) / a.at(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) * inv;
      for (size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

namespace {
void row_combinations(size_t n, size_t k, std::vector<size_t>& cur, size_t start,
                      const std::function<void(const std::vector<size_t>&)>& fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    row_combinations(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Rat> maximal_minors(const Mat& m) {
  size_t n = m.rows(), k = m.cols();
  if (k > n) throw std::invalid_argument("maximal_minors expects a tall matrix");
  if (k == 0) return {Rat(1)};
  std::vector<Rat> out;
  std::vector<size_t> cur;
  row_combinations(n, k, cur, 0, [&](const std::vector<size_t>& rows) {
    Mat sub(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], j);
    out.push_back(determinant(sub));
  });
  return out;
}

std::vector<size_t> independent_subset(const std::vector<Vec>& vectors) {
  std::vector<size_t> chosen;
  if (vectors.empty()) return chosen;
  std::vector<Vec> acc;
  for (size_t i = 0; i < vectors.size(); ++i) {
    acc.push_back(vectors[i]);
    Mat m = Mat::from_columns(acc);
    if (rank(m) == acc.size()) {
      chosen.push_back(i);
    } else {
      acc.pop_back();
    }
  }
  return chosen;
}

}  // namespace wittkit
