#include <doctest.h>

#include "support.hpp"
#include "wittkit/heights.hpp"

using namespace wittkit;
using testsupport::gram_from_rows;
using testsupport::vec_of;

TEST_CASE("sup-norm height") {
  CHECK(*sup_height(vec_of({"1", "2"})).value == 2);
  CHECK(*sup_height(vec_of({"2", "4"})).value == 2);  // projective homogeneity
  CHECK(*sup_height(vec_of({"1", "0", "0", "0"})).value == 1);
  CHECK_THROWS_AS(sup_height(Vec{Rat(0), Rat(0)}), std::invalid_argument);
}

TEST_CASE("euclidean height") {
  HeightValue h = euclidean_height(vec_of({"1", "2"}));
  CHECK(h.square == 5);
  CHECK(!h.value);
  // projective: the finite places cancel the content, so (3,0) ~ (1,0)
  h = euclidean_height(vec_of({"3", "0"}));
  CHECK(h.square == 1);
  CHECK(*h.value == 1);
  CHECK(euclidean_height(vec_of({"3", "0"})).square == euclidean_height(vec_of({"1", "0"})).square);
  CHECK(euclidean_height(vec_of({"1", "1", "1"})).square == 3);
}

TEST_CASE("inhomogeneous height") {
  CHECK(*inhomogeneous_height(vec_of({"1/2"})).value == 2);
  CHECK(*inhomogeneous_height(Vec{Rat(0), Rat(0)}).value == 1);
  CHECK(*inhomogeneous_height(vec_of({"1", "2"})).value == 2);
  CHECK(inhom_value(vec_of({"1", "2"})) == 2);
}

TEST_CASE("matrix height") {
  CHECK(*matrix_height(Mat::identity(2)).value == 1);
  CHECK(*matrix_height(gram_from_rows({{"0", "1/2"}, {"1/2", "0"}})).value == 1);
  CHECK(*matrix_height(gram_from_rows({{"2", "0"}, {"0", "3"}})).value == 3);
  CHECK_THROWS_AS(matrix_height(Mat(2, 2)), std::invalid_argument);
}

TEST_CASE("subspace height via Grassmann coordinates") {
  Subspace v = Subspace::span(3, {vec_of({"1", "0", "1"}), vec_of({"0", "1", "1"})});
  CHECK(subspace_height(v).square == 3);
  CHECK(subspace_height(Subspace::full(4)).square == 1);
  CHECK(subspace_height(Subspace::span(2, {vec_of({"1", "0"})})).square == 1);
}

TEST_CASE("duality between a subspace and its kernel description") {
  Subspace v = Subspace::span(3, {vec_of({"1", "0", "1"}), vec_of({"0", "1", "1"})});
  CHECK(duality_holds(v));
  CHECK(duality_holds(Subspace::span(2, {vec_of({"1", "0"})})));
  Subspace w = Subspace::span(2, {vec_of({"2", "3"})});
  CHECK(subspace_height(w).square == 13);
  CHECK(duality_holds(w));
  CHECK_THROWS_AS(duality_holds(Subspace::full(3)), std::invalid_argument);

  CorpusRng rng(31);
  for (int t = 0; t < 40; ++t) {
    size_t n = 2 + rng.uniform(0, 4);
    size_t l = 1 + rng.uniform(0, static_cast<long>(n) - 2);
    CHECK(duality_holds(testsupport::random_subspace(rng, n, l)));
  }
}

TEST_CASE("height sandwich between sup and euclidean norms") {
  CorpusRng rng(32);
  for (int t = 0; t < 80; ++t) {
    size_t n = 1 + rng.uniform(0, 7);
    Vec x = testsupport::random_vec(rng, n);
    Rat h_sq = sup_height(x).square;
    Rat e_sq = euclidean_height(x).square;
    CHECK(h_sq <= e_sq);
    CHECK(e_sq <= Rat(static_cast<long>(n)) * h_sq);
  }
}

TEST_CASE("place-product route agrees with the primitive representative") {
  CorpusRng rng(33);
  for (int t = 0; t < 60; ++t) {
    size_t n = 1 + rng.uniform(0, 5);
    Vec x = testsupport::random_vec(rng, n, 60, 12);
    CHECK(*sup_height(x).value == *sup_height_via_places(x).value);
  }
}

TEST_CASE("linear combination height bound") {
  // h(sum xi_i x_i) <= L h(xi) prod h(x_i)
  CorpusRng rng(34);
  for (int t = 0; t < 60; ++t) {
    size_t n = 2 + rng.uniform(0, 3);
    size_t l = 1 + rng.uniform(0, 3);
    std::vector<Vec> xs;
    Vec coeffs(l);
    for (size_t i = 0; i < l; ++i) {
      xs.push_back(testsupport::random_vec(rng, n, 6, 3));
      coeffs[i] = testsupport::random_rat(rng, 6, 3);
    }
    Vec sum(n, Rat(0));
    for (size_t i = 0; i < l; ++i)
      for (size_t k = 0; k < n; ++k) sum[k] += coeffs[i] * xs[i][k];
    Rat rhs = Rat(static_cast<long>(l)) * inhom_value(coeffs);
    for (const Vec& x : xs) rhs *= inhom_value(x);
    CHECK(inhom_value(sum) <= rhs);
  }
}

TEST_CASE("spanning-set height bound") {
  // H(span{U_1..U_k, x_1..x_m})^2 <= N^m prod H(U_i)^2 prod H(x_j)^2
  CorpusRng rng(35);
  for (int t = 0; t < 50; ++t) {
    size_t n = 2 + rng.uniform(0, 3);
    size_t subs = 1 + rng.uniform(0, 1);
    size_t vecs = 1 + rng.uniform(0, 1);
    std::vector<Subspace> us;
    std::vector<Vec> gens;
    Rat rhs = 1;
    for (size_t i = 0; i < subs; ++i) {
      size_t l = 1 + rng.uniform(0, static_cast<long>(n) - 1);
      Subspace u = testsupport::random_subspace(rng, n, l);
      us.push_back(u);
      rhs *= u.height_sq();
      for (size_t c = 0; c < u.dim(); ++c) gens.push_back(u.basis().column(c));
    }
    for (size_t i = 0; i < vecs; ++i) {
      Vec x = testsupport::random_vec(rng, n, 5, 2);
      gens.push_back(x);
      Rat h = *sup_height(x).value;
      rhs *= h * h * Rat(static_cast<long>(n));
    }
    Subspace span = Subspace::span(n, gens);
    CHECK(span.height_sq() <= rhs);
  }
}

TEST_CASE("row-span height of a matrix product with a form") {
  // H(X F)^2 <= N^{3J} H(F)^{2J} prod H(x_i)^2 for the row vectors x_i
  CorpusRng rng(36);
  int done = 0;
  while (done < 50) {
    size_t n = 2 + rng.uniform(0, 3);
    size_t j = 1 + rng.uniform(0, 2);
    if (j > n) continue;
    Mat xt = testsupport::random_full_rank(rng, n, j, 4);  // columns = rows of X
    Mat x = xt.transpose();
    Mat f = testsupport::random_symmetric(rng, n, 5, 2);
    Mat xf = x * f;
    if (rank(xf) != j) continue;
    Rat lhs = rowspan_height(xf).square;
    Rat hf = *matrix_height(f).value;
    Rat rhs = 1;
    for (size_t i = 0; i < j; ++i) {
      Rat h = *sup_height(x.row(i)).value;
      rhs *= h * h;
    }
    for (size_t i = 0; i < 3 * j; ++i) rhs *= Rat(static_cast<long>(n));
    for (size_t i = 0; i < 2 * j; ++i) rhs *= hf;
    CHECK(lhs <= rhs);
    ++done;
  }
}

TEST_CASE("intersection height bound") {
  // H(U1 n U2)^2 <= H(U1)^2 H(U2)^2
  CorpusRng rng(37);
  int done = 0;
  while (done < 50) {
    size_t n = 2 + rng.uniform(0, 4);
    Subspace a = testsupport::random_subspace(rng, n, 1 + rng.uniform(0, static_cast<long>(n) - 1));
    Subspace b = testsupport::random_subspace(rng, n, 1 + rng.uniform(0, static_cast<long>(n) - 1));
    Subspace meet = intersect(a, b);
    if (meet.dim() == 0) continue;
    CHECK(meet.height_sq() <= a.height_sq() * b.height_sq());
    ++done;
  }
}

TEST_CASE("height value upper bounds are upper") {
  CorpusRng rng(38);
  for (int t = 0; t < 40; ++t) {
    Vec x = testsupport::random_vec(rng, 3, 50, 9);
    HeightValue h = euclidean_height(x);
    CHECK(Rat(h.upper) * Rat(h.upper) >= h.square);
    HeightValue s = sup_height(x);
    CHECK(Rat(s.upper) >= *s.value);
  }
}
