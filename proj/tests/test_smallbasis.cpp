#include <doctest.h>

#include "support.hpp"
#include "wittkit/heights.hpp"
#include "wittkit/smallbasis.hpp"

using namespace wittkit;
using testsupport::gram_from_rows;
using testsupport::vec_of;

TEST_CASE("small basis of simple subspaces") {
  SmallBasis sb = small_basis(Subspace::span(3, {vec_of({"0", "0", "1"})}), 16);
  REQUIRE(sb.vectors.size() == 1);
  CHECK(sb.vectors[0] == vec_of({"0", "0", "1"}));
  CHECK(sb.height_product == 1);
  CHECK(sb.target_sq == 1);

  sb = small_basis(Subspace::full(4), 16);
  REQUIRE(sb.vectors.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    for (size_t k = 0; k < 4; ++k) {
      CHECK(sb.vectors[i][k] == (i == k ? 1 : 0));
    }
  }
  CHECK(sb.height_product == 1);

  Subspace u = Subspace::span(3, {vec_of({"1", "0", "1"}), vec_of({"0", "1", "1"})});
  sb = small_basis(u, 16);
  REQUIRE(sb.vectors.size() == 2);
  CHECK(sb.height_product * sb.height_product <= u.height_sq());  // product <= sqrt(3)
}

TEST_CASE("siegel height-product bound on random subspaces") {
  CorpusRng rng(71);
  for (int t = 0; t < 30; ++t) {
    size_t n = 2 + rng.uniform(0, 4);
    size_t l = 1 + rng.uniform(0, static_cast<long>(n) - 1);
    Subspace u = testsupport::random_subspace(rng, n, l);
    SmallBasis sb = small_basis(u, 64);
    CHECK(sb.vectors.size() == l);
    CHECK(sb.height_product * sb.height_product <= u.height_sq());
    // span preservation: identical Grassmann data
    CHECK(Subspace::span(n, sb.vectors) == u);
    // heights ascending
    for (size_t i = 0; i + 1 < sb.vectors.size(); ++i) {
      CHECK(inhom_value(sb.vectors[i]) <= inhom_value(sb.vectors[i + 1]));
    }
    // entries are primitive integer vectors whose h equals the sup-norm
    for (const Vec& v : sb.vectors) {
      std::vector<Int> p = primitive_integer(v);
      CHECK(to_rational(p) == v);
      CHECK(Rat(sup_norm(p)) == inhom_value(v));
    }
  }
}

TEST_CASE("small basis is deterministic") {
  CorpusRng rng(72);
  Subspace u = testsupport::random_subspace(rng, 5, 3);
  SmallBasis a = small_basis(u, 32);
  SmallBasis b = small_basis(u, 32);
  CHECK(a.vectors == b.vectors);
  CHECK(a.height_product == b.height_product);
}

TEST_CASE("small basis usually returns a genuine lattice basis") {
  CorpusRng rng(73);
  int lattice_count = 0;
  for (int t = 0; t < 20; ++t) {
    size_t n = 3 + rng.uniform(0, 2);
    size_t l = 2 + rng.uniform(0, 1);
    Subspace u = testsupport::random_subspace(rng, n, l);
    SmallBasis sb = small_basis(u, 64);
    if (sb.lattice_basis) ++lattice_count;
  }
  CHECK(lattice_count >= 18);  // the minima fallback should stay exceptional
}

TEST_CASE("cutoff errors surface as CutoffExceeded") {
  // A sublattice whose second minimum exceeds the cutoff: the saturated
  // lattice of this line has smallest vector (1, 100).
  Subspace line(2, Mat::from_columns({vec_of({"1", "100"})}));
  CHECK_THROWS_AS(small_basis(line, 0), std::invalid_argument);
  // the floor cutoff covers the reduced basis, so small cutoffs still work
  SmallBasis sb = small_basis(line, 1);
  CHECK(sb.vectors.size() == 1);
}

TEST_CASE("radical complement") {
  QuadraticSpace q = QuadraticSpace::whole(
      gram_from_rows({{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "0"}}));
  Subspace r = radical_complement(q);
  CHECK(r == Subspace::span(3, {vec_of({"1", "0", "0"}), vec_of({"0", "1", "0"})}));

  QuadraticSpace regular = QuadraticSpace::whole(Mat::identity(3));
  CHECK(radical_complement(regular) == Subspace::full(3));

  QuadraticSpace degenerate(gram_from_rows({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}),
                            Subspace::span(3, {vec_of({"1", "0", "0"}), vec_of({"0", "1", "0"})}));
  CHECK_THROWS_AS(radical_complement(degenerate), std::invalid_argument);
}

TEST_CASE("radical complement is regular and complements the radical") {
  CorpusRng rng(74);
  for (int t = 0; t < 15; ++t) {
    size_t n = 3 + rng.uniform(0, 2);
    Mat g = testsupport::random_symmetric(rng, n, 4, 2);
    // force some degeneracy: zero out the last row and column sometimes
    if (rng.uniform(0, 1) == 0) {
      for (size_t i = 0; i < n; ++i) {
        g.at(i, n - 1) = 0;
        g.at(n - 1, i) = 0;
      }
      if (g.is_zero()) continue;
    }
    QuadraticSpace q = QuadraticSpace::whole(g);
    Subspace rad = radical(q);
    if (rad.dim() == q.space.dim()) continue;
    Subspace r = radical_complement(q);
    CHECK(r.dim() + rad.dim() == q.space.dim());
    CHECK(intersection_dim(r, rad) == 0);
    QuadraticSpace restricted(g, r);
    CHECK(radical(restricted).dim() == 0);
  }
}
