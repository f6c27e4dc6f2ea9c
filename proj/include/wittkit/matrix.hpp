#pragma once

#include <cstddef>
#include <vector>

#include "wittkit/rational.hpp"

namespace wittkit {

/// Dense matrix over Q, row-major. All operations are exact.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Mat identity(size_t n);
  /// Builds the matrix whose columns are the given vectors (all same length).
  static Mat from_columns(const std::vector<Vec>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec column(size_t j) const;
  Vec row(size_t i) const;
  Vec flatten() const { return a_; }

  Mat transpose() const;
  Mat operator*(const Mat& rhs) const;
  Vec apply(const Vec& x) const;  // matrix * column vector

  bool operator==(const Mat& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }

  bool is_symmetric() const;
  bool is_zero() const;

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(Mat& m);

size_t rank(const Mat& m);

/// Columns form a basis of the right nullspace {x : m x = 0}.
Mat kernel(const Mat& m);

Rat determinant(const Mat& m);  // square input

/// All maximal (cols x cols) minors of a tall matrix, row subsets in
/// lexicographic order: the Grassmann coordinates of the column span.
std::vector<Rat> maximal_minors(const Mat& m);

/// Greedily selects a maximal linearly independent subset of the given
/// vectors, in order. Returns their indices.
std::vector<size_t> independent_subset(const std::vector<Vec>& vectors);

}  // namespace wittkit
