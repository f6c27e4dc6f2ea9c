#pragma once

#include <vector>

#include "wittkit/matrix.hpp"
#include "wittkit/pipeline.hpp"
#include "wittkit/rational.hpp"
#include "wittkit/subspace.hpp"

namespace testsupport {

using wittkit::CorpusRng;
using wittkit::Mat;
using wittkit::Rat;
using wittkit::Subspace;
using wittkit::Vec;

inline Rat random_rat(CorpusRng& rng, long num_bound, long den_bound, bool nonzero = false) {
  while (true) {
    Rat q = rng.rational(num_bound, den_bound);
    if (!nonzero || q != 0) return q;
  }
}

inline Vec random_vec(CorpusRng& rng, size_t n, long num_bound = 9, long den_bound = 4,
                      bool nonzero = true) {
  while (true) {
    Vec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = random_rat(rng, num_bound, den_bound);
    if (!nonzero || !wittkit::is_zero_vector(v)) return v;
  }
}

inline Mat random_full_rank(CorpusRng& rng, size_t n, size_t l, long bound = 5) {
  while (true) {
    std::vector<Vec> cols;
    for (size_t c = 0; c < l; ++c) {
      Vec v(n);
      for (size_t i = 0; i < n; ++i) v[i] = Rat(rng.uniform(-bound, bound));
      cols.push_back(v);
    }
    Mat m = Mat::from_columns(cols);
    if (wittkit::rank(m) == l) return m;
  }
}

inline Subspace random_subspace(CorpusRng& rng, size_t n, size_t l, long bound = 5) {
  return Subspace(n, random_full_rank(rng, n, l, bound));
}

inline Mat random_symmetric(CorpusRng& rng, size_t n, long num_bound = 9, long den_bound = 4) {
  while (true) {
    Mat g(n, n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i; j < n; ++j) {
        Rat v = rng.rational(num_bound, den_bound);
        g.at(i, j) = v;
        g.at(j, i) = v;
      }
    }
    if (!g.is_zero()) return g;
  }
}

inline Mat gram_from_rows(const std::vector<std::vector<const char*>>& rows) {
  size_t n = rows.size();
  Mat g(n, rows[0].size());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) g.at(i, j) = wittkit::parse_rational(rows[i][j]);
  return g;
}

inline Vec vec_of(const std::vector<const char*>& entries) {
  Vec v;
  for (const char* e : entries) v.push_back(wittkit::parse_rational(e));
  return v;
}

}  // namespace testsupport
