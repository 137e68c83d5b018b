#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conlab/hamiltonian.hpp"
#include "conlab/rng.hpp"

using namespace conlab;

TEST_CASE("lifted evaluation equals f(q) inside the flat region") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  CHECK(evaluate(*H, PhasePoint(0.5, 0.0), 0.0) == doctest::Approx(-1.0));
  CHECK(evaluate(*H, PhasePoint(0.0, 9.5), 0.3) == doctest::Approx(1.0));
  CHECK(evaluate(*H, PhasePoint(0.25, -13.0), 0.0) == 0.0);
}

TEST_CASE("zero-amplitude bump vanishes") {
  auto B = bump(0.3, 0.0, 0.2, 0.5, 0.0);
  CHECK(evaluate(*B, PhasePoint(0.3, 0.0), 0.0) == 0.0);
}

TEST_CASE("scale is pointwise linear") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  auto S = scale(2.0, H);
  CHECK(evaluate(*S, PhasePoint(0.0, 0.0), 0.0) == doctest::Approx(2.0));
}

TEST_CASE("cutoff profile is flat inside, zero outside, monotone between") {
  CutoffSpec c(1.0, 3.0);
  CHECK(detail::cutoff_value(c, 0.0) == 1.0);
  CHECK(detail::cutoff_value(c, -0.9) == 1.0);
  CHECK(detail::cutoff_value(c, 3.5) == 0.0);
  double prev = 1.0;
  for (double p = 1.0; p <= 3.0; p += 0.05) {
    double v = detail::cutoff_value(c, p);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
  CHECK(detail::cutoff_derivative(c, 2.0) < 0.0);
  CHECK(detail::cutoff_derivative(c, -2.0) > 0.0);
  CHECK(detail::cutoff_derivative(c, 0.5) == 0.0);
}

TEST_CASE("smooth bump normalization") {
  CHECK(detail::smooth_bump(0.0) == doctest::Approx(1.0));
  CHECK(detail::smooth_bump(1.0) == 0.0);
  CHECK(detail::smooth_bump(-1.0) == 0.0);
  CHECK(detail::smooth_bump(0.5) > 0.0);
}

TEST_CASE("support radius follows interval arithmetic") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  auto B = bump(0.0, 20.0, 0.2, 1.0, 1.0);
  CHECK(H->support_radius() == doctest::Approx(12.0));
  CHECK(B->support_radius() == doctest::Approx(21.0));
  auto S = sum({H, B});
  CHECK(S->support_radius() == doctest::Approx(21.0));
}

TEST_CASE("sum legality: disjoint momentum supports") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  auto far = bump(0.5, 20.0, 0.2, 1.0, 1.0);
  CHECK_NOTHROW(sum({H, far}));
}

TEST_CASE("sum legality: commuting lifted shapes") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  auto K = lifted(TrigPoly::sine(2), CutoffSpec(14.0, 15.0));
  CHECK_NOTHROW(sum({H, scale(0.5, K)}));
}

TEST_CASE("sum legality: disjoint base arcs") {
  auto b1 = bump(0.1, 0.0, 0.1, 1.0, 1.0);
  auto b2 = bump(0.6, 0.0, 0.1, 1.0, 1.0);
  CHECK_NOTHROW(sum({b1, b2}));
}

TEST_CASE("sum rejects overlapping non-commuting members") {
  auto b1 = bump(0.1, 0.0, 0.2, 1.0, 1.0);
  auto b2 = bump(0.2, 0.5, 0.2, 1.0, 1.0);
  CHECK_THROWS_AS(sum({b1, b2}), std::invalid_argument);
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  auto inside = bump(0.5, 0.0, 0.2, 1.0, 1.0);
  CHECK_THROWS_AS(sum({H, inside}), std::invalid_argument);
}

TEST_CASE("compose schedules the right generator halves") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));   // f(0)=1
  auto K = lifted(TrigPoly::constant(0.25), CutoffSpec(10.0, 12.0));
  auto C = compose(H, K);
  PhasePoint z(0.0, 0.0);
  CHECK(evaluate(*C, z, 0.1) == doctest::Approx(0.5));   // 2 K
  CHECK(evaluate(*C, z, 0.75) == doctest::Approx(2.0));  // 2 H
  CHECK_FALSE(C->time_independent());
}

TEST_CASE("inverse of a time-independent spec stays time-independent") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  CHECK(inverse(H)->time_independent());
  CHECK(evaluate(*inverse(H), PhasePoint(0.0, 0.0), 0.2) == doctest::Approx(-1.0));
  auto C = compose(H, H);
  CHECK_FALSE(inverse(C)->time_independent());
}

TEST_CASE("iterate multiplies the generator") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(100.0, 102.0));
  auto I = iterate(H, 5);
  CHECK(I->time_independent());
  CHECK(evaluate(*I, PhasePoint(0.0, 0.0), 0.4) == doctest::Approx(5.0));
  CHECK_THROWS_AS(iterate(H, 0), std::invalid_argument);
}

TEST_CASE("viterbo rescale folds the base coordinate") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  auto V = viterbo_rescale(H, 3);
  // H(3q) at q = 1/6 is cos(pi) = -1.
  CHECK(evaluate(*V, PhasePoint(1.0 / 6.0, 0.0), 0.0) == doctest::Approx(-1.0));
  HamEval e = eval_static(*V, 0.1, 0.0);
  HamEval inner = eval_static(*H, 0.3, 0.0);
  CHECK(e.dq == doctest::Approx(3.0 * inner.dq));
  CHECK_THROWS_AS(viterbo_rescale(compose(H, H), 2), std::invalid_argument);
}

TEST_CASE("protocol flattening covers [0,1] with autonomous pieces") {
  auto H = lifted(TrigPoly::cosine(1), CutoffSpec(10.0, 12.0));
  auto C = compose(inverse(H), iterate(H, 2));
  double total = 0.0;
  for (const auto& seg : C->protocol()) {
    CHECK(seg.leaf->time_independent());
    total += seg.duration;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // autonomous subtrees collapse to single segments
  CHECK(C->protocol().size() == 2);

  auto D = compose(inverse(H), compose(H, H));
  total = 0.0;
  for (const auto& seg : D->protocol()) {
    CHECK(seg.leaf->time_independent());
    total += seg.duration;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(D->protocol().size() == 3);
  CHECK(D->protocol()[0].factor == doctest::Approx(4.0));
  // the trailing inverse carries its sign inside the leaf
  CHECK(D->protocol()[2].factor == doctest::Approx(2.0));
  CHECK(eval_static(*D->protocol()[2].leaf, 0.0, 0.0).value ==
        doctest::Approx(-eval_static(*H, 0.0, 0.0).value));
}

TEST_CASE("zero spec evaluates to zero") {
  auto Z = zero_ham();
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    PhasePoint z(rng.uniform(), rng.uniform(-5.0, 5.0));
    CHECK(evaluate(*Z, z, rng.uniform()) == 0.0);
  }
}

TEST_CASE("auto cutoff clears the iterate horizon") {
  TrigPoly f = TrigPoly::cosine(1);
  CutoffSpec c = auto_cutoff(f, 40.0);
  CHECK(c.inner_radius >= 1.0 + 40.0 * kTwoPi - 1e-9);
  CHECK(c.outer_radius > c.inner_radius);
}

TEST_CASE("bump parameter validation") {
  CHECK_THROWS_AS(bump(0.0, 0.0, 0.6, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bump(0.0, 0.0, -0.1, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(CutoffSpec(2.0, 1.0), std::invalid_argument);
}
