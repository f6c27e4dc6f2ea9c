#include <doctest.h>

#include "support.hpp"
#include "wittkit/lattice.hpp"
#include "wittkit/matrix.hpp"
#include "wittkit/rational.hpp"
#include "wittkit/subspace.hpp"

using namespace wittkit;
using testsupport::gram_from_rows;
using testsupport::vec_of;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == frac(1, 2));
  CHECK(parse_rational("-4/4") == -1);
  CHECK(rat_to_string(frac(1, 2)) == "1/2");
  CHECK(rat_to_string(Rat(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("primitive integer representative") {
  std::vector<Int> p = primitive_integer(vec_of({"1/2", "1/3"}));
  CHECK(p == std::vector<Int>{3, 2});
  p = primitive_integer(vec_of({"-2", "-4"}));
  CHECK(p == std::vector<Int>{1, 2});
  p = primitive_integer(vec_of({"0", "-5"}));
  CHECK(p == std::vector<Int>{0, 1});
  CHECK_THROWS_AS(primitive_integer(Vec{Rat(0), Rat(0)}), std::invalid_argument);
}

TEST_CASE("exact square roots") {
  CHECK(*exact_sqrt(frac(9, 4)) == frac(3, 2));
  CHECK(*exact_sqrt(Rat(0)) == 0);
  CHECK(!exact_sqrt(Rat(2)));
  CHECK(!exact_sqrt(Rat(-4)));
}

TEST_CASE("rref, rank, kernel, determinant") {
  Mat m = gram_from_rows({{"1", "2", "3"}, {"2", "4", "6"}, {"1", "0", "1"}});
  CHECK(rank(m) == 2);
  Mat k = kernel(m);
  CHECK(k.cols() == 1);
  CHECK(is_zero_vector(m.apply(k.column(0))));

  Mat sq = gram_from_rows({{"2", "1"}, {"1", "1"}});
  CHECK(determinant(sq) == 1);
  CHECK(determinant(Mat::identity(4)) == 1);

  Mat singular = gram_from_rows({{"1", "2"}, {"2", "4"}});
  CHECK(determinant(singular) == 0);
}

TEST_CASE("maximal minors in row-combination order") {
  Mat b = Mat::from_columns({vec_of({"1", "0", "1"}), vec_of({"0", "1", "1"})});
  std::vector<Rat> minors = maximal_minors(b);
  CHECK(minors == std::vector<Rat>{Rat(1), Rat(1), Rat(-1)});
}

TEST_CASE("subspace canonical form is basis independent") {
  CorpusRng rng(7);
  for (int t = 0; t < 25; ++t) {
    size_t n = 2 + rng.uniform(0, 3);
    size_t l = 1 + rng.uniform(0, static_cast<long>(n) - 1);
    Subspace v = testsupport::random_subspace(rng, n, l);
    // random invertible column operations
    Mat trans = testsupport::random_full_rank(rng, l, l, 3);
    Subspace w(n, v.basis() * trans);
    CHECK(v == w);
    CHECK(v.height_sq() == w.height_sq());
  }
}

TEST_CASE("zero and full subspaces") {
  Subspace z = Subspace::zero(3);
  CHECK(z.dim() == 0);
  CHECK(z.height_sq() == 1);
  Subspace f = Subspace::full(3);
  CHECK(f.dim() == 3);
  CHECK(f.height_sq() == 1);
  CHECK(f.contains(vec_of({"1", "2", "3"})));
  CHECK(!z.contains(vec_of({"1", "0", "0"})));
}

TEST_CASE("intersection dimensions") {
  Subspace a = Subspace::span(3, {vec_of({"1", "0", "0"}), vec_of({"0", "1", "0"})});
  Subspace b = Subspace::span(3, {vec_of({"1", "1", "0"}), vec_of({"0", "0", "1"})});
  CHECK(intersection_dim(a, b) == 1);
  CHECK(intersection_dim(a, a) == 2);
  Subspace e1 = Subspace::span(3, {vec_of({"1", "0", "0"})});
  Subspace e2 = Subspace::span(3, {vec_of({"0", "1", "0"})});
  CHECK(intersection_dim(e1, e2) == 0);
  Subspace meet = intersect(a, b);
  CHECK(meet.dim() == 1);
  CHECK(meet == Subspace::span(3, {vec_of({"1", "1", "0"})}));
}

TEST_CASE("annihilator describes the subspace") {
  CorpusRng rng(11);
  for (int t = 0; t < 20; ++t) {
    size_t n = 3 + rng.uniform(0, 2);
    size_t l = 1 + rng.uniform(0, static_cast<long>(n) - 2);
    Subspace v = testsupport::random_subspace(rng, n, l);
    Mat a = annihilator(v);
    CHECK(a.rows() == n - l);
    Mat prod = a * v.basis();
    CHECK(prod.is_zero());
  }
}

TEST_CASE("integer kernel and saturation") {
  // kernel of (2 4) in Z^2 is generated by (2, -1)
  IMat k = integer_kernel({{Int(2), Int(4)}}, 2);
  REQUIRE(k.size() == 1);
  CHECK(sup_norm(k[0]) == 2);
  CHECK(k[0][0] * 2 + k[0][1] * 4 == 0);

  // saturation of the line through (2, 4) is generated by (1, 2)
  Subspace line(2, Mat::from_columns({vec_of({"2", "4"})}));
  IMat sat = saturation(line);
  REQUIRE(sat.size() == 1);
  std::vector<Int> gen = sat[0];
  canonicalize_integer(gen);
  CHECK(gen == std::vector<Int>{1, 2});

  // full space saturates to the standard lattice
  IMat full = saturation(Subspace::full(3));
  CHECK(full.size() == 3);
}

TEST_CASE("saturated lattice determinant equals the subspace height") {
  // det(B^T B) over a saturated basis equals the squared Grassmann norm
  CorpusRng rng(13);
  for (int t = 0; t < 25; ++t) {
    size_t n = 2 + rng.uniform(0, 4);
    size_t l = 1 + rng.uniform(0, static_cast<long>(n) - 1);
    Subspace v = testsupport::random_subspace(rng, n, l);
    Mat b = reduced_lattice_basis(v);
    Mat gram = b.transpose() * b;
    CHECK(determinant(gram) == v.height_sq());
  }
}

TEST_CASE("lll reduces a skewed basis") {
  IMat cols = {{Int(1), Int(0)}, {Int(100), Int(1)}};
  IMat red = lll_reduce(cols);
  REQUIRE(red.size() == 2);
  CHECK(sup_norm(red[0]) <= 1);
  CHECK(sup_norm(red[1]) <= 1);
}

TEST_CASE("primitive enumeration order") {
  PrimitiveEnumerator en(2);
  std::vector<std::vector<long>> got;
  while (auto c = en.next(2)) got.push_back(*c);
  std::vector<std::vector<long>> want = {
      {1, 1}, {1, 0}, {1, -1}, {0, 1},           // shell 1
      {2, 1}, {2, -1}, {1, 2}, {1, -2},          // shell 2
  };
  CHECK(got == want);
}

TEST_CASE("shell visitor agrees with the pull enumerator") {
  for (size_t dim : {2, 3, 4}) {
    std::vector<std::vector<long>> pulled;
    PrimitiveEnumerator en(dim);
    while (auto c = en.next(4)) pulled.push_back(*c);
    std::vector<std::vector<long>> visited;
    for (long s = 1; s <= 4; ++s) {
      visit_canonical_shell(dim, s, [&](const std::vector<long>& c) {
        visited.push_back(c);
        return true;
      });
    }
    CHECK(pulled == visited);
  }
  // early stop
  int count = 0;
  bool completed = visit_canonical_shell(3, 2, [&](const std::vector<long>&) {
    return ++count < 5;
  });
  CHECK(!completed);
  CHECK(count == 5);
}

TEST_CASE("enumeration covers each projective class once") {
  PrimitiveEnumerator en(3);
  std::vector<std::vector<long>> seen;
  while (auto c = en.next(2)) {
    for (const auto& prev : seen) CHECK(prev != *c);
    long g = 0;
    for (long d : *c) g = std::gcd(g, d < 0 ? -d : d);
    CHECK(g == 1);
    seen.push_back(*c);
  }
  // shells 1..2 in dim 3: 13 + 36 canonical primitive vectors
  CHECK(seen.size() == 49);
}
