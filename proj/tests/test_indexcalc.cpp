// test_indexcalc.cpp -- exact dimension formulas and the gluing identity.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "conlab/indexcalc.hpp"
#include "conlab/rng.hpp"
#include "doctest.h"

using namespace conlab;

TEST_CASE("half-integer arithmetic is exact") {
  CHECK(Half(3).twice() == 6);
  CHECK(half_of(3).twice() == 3);
  CHECK_FALSE(half_of(3).is_integer());
  CHECK(half_of(4).is_integer());
  CHECK((half_of(3) + half_of(1)) == Half(2));
  CHECK((Half(1) - half_of(1)) == half_of(1));
  CHECK((-half_of(5)).twice() == -5);
  CHECK((half_of(3) * 4) == Half(6));
  CHECK(half_of(3).str() == "3/2");
  CHECK(Half(-2).str() == "-2");
  CHECK(half_of(-1).str() == "-1/2");
  CHECK(half_of(1) < Half(1));
  CHECK(half_of(1).to_double() == 0.5);
}

TEST_CASE("index data validation") {
  CHECK_NOTHROW(IndexData(half_of(3), 2, 1));
  CHECK_THROWS_AS(IndexData(Half(0), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(IndexData(Half(0), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(IndexData(Half(0), 2, -1), std::invalid_argument);
}

TEST_CASE("pants dimension formula") {
  CHECK(dim_pants(Half(0), Half(0), Half(0), 1, 0) == Half(-1));
  CHECK(dim_pants(Half(0), Half(0), Half(0), 2, 2) == Half(-1));
  CHECK(dim_pants(Half(0), Half(0), Half(0), 0, 0) == Half(0));
  CHECK(dim_pants(half_of(1), half_of(3), half_of(1), 2, 1) ==
        half_of(3) + half_of(1) - Half(2));
}

TEST_CASE("half strip dimensions") {
  CHECK(dim_half_strip(Half(0), 2, StripSide::Incoming) == Half(1));
  CHECK(dim_half_strip(half_of(1), 1, StripSide::Outgoing) == Half(1));
  CHECK(dim_half_strip(Half(0), 0, StripSide::Incoming) == Half(0));

  // The two half strips at one generator assemble to dimension dim_N.
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const Half mu = Half::from_twice(rng.uniform_int(-40, 40));
    const int dn = (int)rng.uniform_int(0, 10);
    CHECK(dim_half_strip(mu, dn, StripSide::Incoming) +
              dim_half_strip(mu, dn, StripSide::Outgoing) ==
          Half(dn));
  }
}

TEST_CASE("whole strip dimensions") {
  for (int d = 0; d <= 4; ++d)
    CHECK(dim_whole_strip(half_of(5), half_of(5), d, d) == Half(0));
  CHECK(dim_whole_strip(Half(1), Half(0), 2, 1) == Half(0));
  CHECK(dim_whole_strip(Half(0), Half(0), 1, 0) == Half(-1));
}

TEST_CASE("gluing identity holds for every input") {
  CHECK(verify_gluing(Half(0), Half(0), Half(0), Half(0), Half(0), 1, 0));

  Rng rng(99);
  for (int t = 0; t < 10000; ++t) {
    const auto mu = [&] { return Half::from_twice(rng.uniform_int(-40, 40)); };
    const int dm = (int)rng.uniform_int(0, 10);
    const int dn = (int)rng.uniform_int(0, dm > 0 ? dm : 0);
    REQUIRE(verify_gluing(mu(), mu(), mu(), mu(), mu(), dm, dn));
  }
}

TEST_CASE("product degree") {
  CHECK(product_degree(1, 1, 1) == 1);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const int r = (int)rng.uniform_int(-10, 10);
    const int s = (int)rng.uniform_int(-10, 10);
    CHECK(product_degree(r, s, 0) == r + s);
    // An intersection-type product of degree r+s-dim_N can only agree when
    // the conormal fills the whole ambient dimension.
    const int dm = (int)rng.uniform_int(1, 10);
    const int dn = (int)rng.uniform_int(0, dm - 1);
    CHECK(r + s - dn != product_degree(r, s, dm));
  }
}

TEST_CASE("zero-dimensional pants force the product grading shift") {
  Rng rng(31);
  for (int t = 0; t < 2000; ++t) {
    const Half mu1 = Half::from_twice(rng.uniform_int(-40, 40));
    const Half mu2 = Half::from_twice(rng.uniform_int(-40, 40));
    const int dm = (int)rng.uniform_int(0, 10);
    const int dn = (int)rng.uniform_int(0, 10);
    const Half forced = mu1 + mu2 + half_of(dn) - Half(dm);
    REQUIRE(dim_pants(mu1, mu2, forced, dm, dn) == Half(0));
    // In shifted grading r = dim_N/2 + mu this is exactly r1 + r2 - dim_M.
    const Half r1 = half_of(dn) + mu1;
    const Half r2 = half_of(dn) + mu2;
    REQUIRE(half_of(dn) + forced == r1 + r2 - Half(dm));
  }
}
