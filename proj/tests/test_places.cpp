#include <doctest.h>

#include "support.hpp"
#include "wittkit/places.hpp"

using namespace wittkit;
using testsupport::vec_of;

TEST_CASE("absolute values at finite and infinite places") {
  CHECK(absolute_value(Rat(12), Place::finite(2)) == frac(1, 4));
  CHECK(absolute_value(Rat(1), Place::finite(7)) == 1);
  CHECK(absolute_value(Rat(1), Place::infinite_place()) == 1);
  CHECK(absolute_value(frac(1, 3), Place::finite(3)) == 3);
  CHECK(absolute_value(Rat(0), Place::finite(5)) == 0);
  CHECK(absolute_value(Rat(0), Place::infinite_place()) == 0);
  CHECK(absolute_value(Rat(-7), Place::infinite_place()) == 7);
}

TEST_CASE("finite places require primes") {
  CHECK_THROWS_AS(Place::finite(4), std::invalid_argument);
  CHECK_THROWS_AS(Place::finite(1), std::invalid_argument);
  CHECK_NOTHROW(Place::finite(1000003));
}

TEST_CASE("support places") {
  auto s = support(Rat(6));
  REQUIRE(s.size() == 3);
  CHECK(s[0].archimedean);
  CHECK(s[1].prime == 2);
  CHECK(s[2].prime == 3);

  s = support(Rat(1));
  CHECK(s.size() == 1);

  s = support(frac(-5, 2));
  REQUIRE(s.size() == 3);
  CHECK(s[1].prime == 2);
  CHECK(s[2].prime == 5);

  CHECK_THROWS_AS(support(Rat(0)), std::invalid_argument);
}

TEST_CASE("local heights") {
  Vec x = vec_of({"1", "2"});
  CHECK(local_height(x, Place::finite(2)) == 1);
  CHECK(local_height(x, Place::infinite_place()) == 2);
  CHECK(local_height_euclid_sq(x) == 5);
  CHECK_THROWS_AS(local_height(Vec{Rat(0)}, Place::finite(2)), std::invalid_argument);
}

TEST_CASE("product formula") {
  CorpusRng rng(101);
  for (int t = 0; t < 100; ++t) {
    Rat a = testsupport::random_rat(rng, 1000000, 1000000, true);
    Rat product = 1;
    for (const Place& v : support(a)) product *= absolute_value(a, v);
    CHECK(product == 1);
  }
}

TEST_CASE("multiplicativity of absolute values") {
  CorpusRng rng(102);
  for (int t = 0; t < 60; ++t) {
    Rat a = testsupport::random_rat(rng, 500, 60, true);
    Rat b = testsupport::random_rat(rng, 500, 60, true);
    std::vector<Place> places = {Place::infinite_place(), Place::finite(2), Place::finite(3),
                                 Place::finite(5), Place::finite(7)};
    for (const Place& v : places) {
      CHECK(absolute_value(a * b, v) == absolute_value(a, v) * absolute_value(b, v));
    }
  }
}

TEST_CASE("ultrametric inequality at finite places") {
  CorpusRng rng(103);
  for (int t = 0; t < 60; ++t) {
    Rat a = testsupport::random_rat(rng, 200, 40);
    Rat b = testsupport::random_rat(rng, 200, 40);
    for (long p : {2L, 3L, 5L}) {
      Place v = Place::finite(p);
      Rat lhs = absolute_value(a + b, v);
      Rat bound = std::max(absolute_value(a, v), absolute_value(b, v));
      CHECK(lhs <= bound);
    }
  }
}

TEST_CASE("prime factorization") {
  CHECK(prime_factors(Int(360)) == std::vector<Int>{2, 3, 5});
  CHECK(prime_factors(Int(-17)) == std::vector<Int>{17});
  CHECK(prime_factors(Int(1)).empty());
  CHECK_THROWS_AS(prime_factors(Int(0)), std::invalid_argument);
}
