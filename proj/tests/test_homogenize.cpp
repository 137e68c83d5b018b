// test_homogenize.cpp -- sequence pairs, property checks, limsup estimation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <vector>

#include "conlab/errors.hpp"
#include "conlab/homogenize.hpp"
#include "conlab/rng.hpp"
#include "conlab/spectral.hpp"
#include "doctest.h"

using namespace conlab;

namespace {

TrigPoly random_poly(Rng& rng, int degree, double scale) {
  Eigen::ArrayXd cc = Eigen::ArrayXd::Zero(degree + 1);
  Eigen::ArrayXd ss = Eigen::ArrayXd::Zero(degree);
  for (int k = 0; k <= degree; ++k) cc[k] = scale * rng.uniform(-1.0, 1.0);
  for (int k = 0; k < degree; ++k) ss[k] = scale * rng.uniform(-1.0, 1.0);
  return TrigPoly(cc, ss);
}

// Dense-sample range of f; 8192 points leaves the sampling gap far below the
// 1e-6 slack used by the stability bound.
std::pair<double, double> sampled_range(const TrigPoly& f) {
  double lo = f.value(0.0), hi = lo;
  for (int i = 1; i < 8192; ++i) {
    const double v = f.value(i / 8192.0);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("oracle pair for the lifted cosine at its minimum") {
  auto H = lifted_auto(TrigPoly::cosine(1), 55.0);
  const auto s = build_sequences(H, ConormalTarget::point(0.5), 50);

  REQUIRE(s.n_max == 50);
  REQUIRE((int)s.a.size() == 50);
  REQUIRE((int)s.b_ratio.size() == 50);
  for (int n = 1; n <= 50; ++n) {
    CHECK(std::fabs(s.a_ratio[n - 1]) <= 1e-6);
    CHECK(std::fabs(s.b_ratio[n - 1] - 2.0) <= 1e-6);
  }
  // ell_M(phi^-1) = 1 while every ell_N step adds f(1/2) = -1, so the
  // increment bound collapses to zero.
  CHECK(s.C >= 0.0);
  CHECK(s.C <= 1e-6);

  const auto rep = check_properties(s);
  CHECK(rep.all_pass);
  REQUIRE(rep.checks.size() == 5);
  for (const auto& c : rep.checks) {
    CHECK(c.pass);
    CHECK(c.margin >= -1e-6);
    CHECK(c.first_violation.empty());
  }

  const auto la = limsup_ratio(s, RatioSeq::A);
  CHECK(la.converged);
  CHECK(std::fabs(la.value) <= 1e-6);
  const auto lb = limsup_ratio(s, RatioSeq::B);
  CHECK(lb.converged);
  CHECK(lb.value == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(lb.tail_window == 5);
}

TEST_CASE("zero Hamiltonian gives the zero pair") {
  const auto s = build_sequences(zero_ham(), ConormalTarget::whole(), 12);
  for (int n = 1; n <= 12; ++n) {
    CHECK(std::fabs(s.a[n - 1]) <= 1e-12);
    CHECK(std::fabs(s.b[n - 1]) <= 1e-12);
  }
  CHECK(s.C <= 1e-12);
  CHECK(check_properties(s).all_pass);

  const auto est = limsup_ratio(s, RatioSeq::A);
  CHECK(est.converged);
  CHECK(std::fabs(est.value) <= 1e-12);
}

TEST_CASE("whole-circle target makes the two sequences coincide") {
  auto H = lifted_auto(TrigPoly::shifted_cosine(0.23) * 0.8, 20.0);
  const auto s = build_sequences(H, ConormalTarget::whole(), 16);
  for (int n = 1; n <= 16; ++n) CHECK(s.a[n - 1] == s.b[n - 1]);
}

TEST_CASE("domination failure is reported, not thrown") {
  SequencePair s;
  s.n_max = 10;
  for (int n = 1; n <= 10; ++n) {
    s.a.push_back(n);
    s.b.push_back(1.0);
  }
  s.C = 1.0;

  const auto rep = check_properties(s, 2000, 1e-6, 5);
  CHECK_FALSE(rep.all_pass);

  const auto* dom = rep.find("a-dominated-by-b");
  REQUIRE(dom != nullptr);
  CHECK_FALSE(dom->pass);
  CHECK(dom->first_violation == "n=2");
  CHECK(dom->margin == doctest::Approx(1.0 - 10.0));  // worst at n = 10
  CHECK(dom->witness == "n=10");

  const auto* mono = rep.find("nondecreasing");
  REQUIRE(mono != nullptr);
  CHECK(mono->pass);
  const auto* inc = rep.find("increments-bounded");
  REQUIRE(inc != nullptr);
  CHECK(inc->pass);
  const auto* pos = rep.find("nonnegative");
  REQUIRE(pos != nullptr);
  CHECK(pos->pass);
}

TEST_CASE("integer counterexample follows the phase rules exactly") {
  const auto ce = counterexample(10);
  const std::vector<double> want = {1, 1, 1, 1, 2, 3, 4, 4, 4, 4};
  REQUIRE(ce.a.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(ce.a[i] == want[i]);
  for (int n = 1; n <= 10; ++n) CHECK(ce.b[n - 1] == n);
  CHECK(ce.C == 1.0);
  REQUIRE(ce.property_report.has_value());
  CHECK(ce.property_report->all_pass);

  // Equality at a threshold continues the phase: a_n/n = 1/3 at n = 3 still
  // holds, a_n/n = 1/2 at n = 18 still increments.
  const auto big = counterexample(40);
  CHECK(big.a[12] == 4.0);   // a_13, holding
  CHECK(big.a[13] == 5.0);   // a_14, increment resumes at n = 13
  CHECK(big.a[18] == 10.0);  // a_19, tie at 9/18 kept incrementing
  CHECK(big.a[19] == 10.0);  // a_20, 10/19 > 1/2 stopped the ramp
  CHECK(big.a[30] == 10.0);  // a_31, tie at 10/30 kept holding
  CHECK(big.a[31] == 11.0);  // a_32, 10/31 < 1/3 resumed

  // Phase turns keep arriving at every scale.
  const auto long_run = counterexample(2000);
  int turns = 0;
  for (int n = 2; n < 2000; ++n) {
    const double inc0 = long_run.a[n - 1] - long_run.a[n - 2];
    const double inc1 = long_run.a[n] - long_run.a[n - 1];
    if (inc0 != inc1) ++turns;
  }
  CHECK(turns >= 10);
}

TEST_CASE("counterexample ratios accumulate at both thresholds") {
  const auto ce = counterexample(20000);
  const auto est = limsup_ratio(ce, RatioSeq::A);

  REQUIRE(est.accumulation_points.size() >= 2);
  const double top = est.accumulation_points.front().first;
  const double bot = est.accumulation_points.back().first;
  CHECK(top >= 0.5 - 0.02);
  CHECK(bot <= 1.0 / 3.0 + 0.02);
  CHECK(top - bot >= 1.0 / 6.0 - 0.04);
  CHECK_FALSE(est.converged);
  CHECK(est.tail_window == 2000);

  const double window_sup =
      *std::max_element(ce.a_ratio.end() - 2000, ce.a_ratio.end());
  CHECK(est.value == window_sup);

  // b_n = n is exactly linear, so that side converges immediately.
  const auto estb = limsup_ratio(ce, RatioSeq::B);
  CHECK(estb.converged);
  CHECK(estb.value == doctest::Approx(1.0));
}

TEST_CASE("fekete limit of subadditive sequences") {
  std::vector<double> lin(40);
  for (int n = 1; n <= 40; ++n) lin[n - 1] = n;
  const auto rl = fekete_limit(lin);
  CHECK(rl.inf_ratio == doctest::Approx(1.0));
  CHECK(rl.final_ratio == doctest::Approx(1.0));

  // b_n = n + log(n+1): subadditive, ratios decrease toward 1 from above,
  // so the running infimum sits at the final ratio and stays above 1.
  std::vector<double> slow(200);
  for (int n = 1; n <= 200; ++n) slow[n - 1] = n + std::log(n + 1.0);
  const auto rs = fekete_limit(slow);
  CHECK(rs.inf_ratio == rs.final_ratio);
  CHECK(rs.inf_ratio > 1.0);
  CHECK(rs.final_ratio == doctest::Approx(1.0 + std::log(201.0) / 200.0));

  auto H = lifted_auto(TrigPoly::cosine(1), 30.0);
  const auto s = build_sequences(H, ConormalTarget::point(0.5), 24);
  const auto ro = fekete_limit(s.b);
  CHECK(ro.inf_ratio == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(ro.final_ratio == doctest::Approx(2.0).epsilon(1e-6));

  std::vector<double> bad = {1.0, 3.0};
  try {
    fekete_limit(bad);
    FAIL("expected NotSubadditiveError");
  } catch (const NotSubadditiveError& e) {
    CHECK(e.m == 1);
    CHECK(e.n == 1);
  }
}

TEST_CASE("sigma on lifted flows picks out the target value of f") {
  auto H = lifted_auto(TrigPoly::cosine(1), 45.0);

  const auto at_min = sigma(H, ConormalTarget::point(0.5), 40);
  CHECK(at_min.converged);
  CHECK(at_min.value == doctest::Approx(-1.0).epsilon(1e-6));

  const auto at_max = sigma(H, ConormalTarget::point(0.0), 40);
  CHECK(at_max.converged);
  CHECK(at_max.value == doctest::Approx(1.0).epsilon(1e-6));

  const auto flat = sigma(zero_ham(), ConormalTarget::whole(), 12);
  CHECK(flat.converged);
  CHECK(std::fabs(flat.value) <= 1e-9);

  // zeta is sigma of the time-1 map for autonomous generators.
  const auto z = zeta(H, ConormalTarget::point(0.5), 40);
  CHECK(z.value == at_min.value);
}

TEST_CASE("sigma is positively homogeneous under iteration") {
  const TrigPoly f = TrigPoly::shifted_cosine(0.37) * 0.6;
  const ConormalTarget targets[] = {ConormalTarget::point(0.3),
                                    ConormalTarget::whole()};
  for (const auto& target : targets) {
    const double base =
        sigma(lifted_auto(f, 14.0), target, 12).value;
    for (int l : {1, 2, 3, 5}) {
      auto H = lifted_auto(f, 1.0 + 12.0 * l);
      const double scaled = sigma(iterate(H, l), target, 12).value;
      CHECK(std::fabs(scaled - l * base) <= l * 1e-6);
    }
  }
}

TEST_CASE("sigma moves by at most the range of the difference") {
  Rng rng(2026);
  const TrigPoly f = random_poly(rng, 2, 0.4);
  const TrigPoly g = random_poly(rng, 2, 0.4);
  auto Hf = lifted_auto(f, 16.0);
  auto Hg = lifted_auto(g, 16.0);
  const auto [dmin, dmax] = sampled_range(f - g);

  const ConormalTarget targets[] = {
      ConormalTarget::whole(), ConormalTarget::point(0.3),
      ConormalTarget::arc(0.1, 0.55, ArcSign::Minus)};
  for (const auto& target : targets) {
    const double diff =
        sigma(Hf, target, 12).value - sigma(Hg, target, 12).value;
    CHECK(diff >= dmin - 1e-6);
    CHECK(diff <= dmax + 1e-6);
  }
}

TEST_CASE("non-graphical iterate interrupts the campaign by index") {
  auto B = bump(0.5, 0.0, 0.3, 0.5, 10.0);
  try {
    build_sequences(B, ConormalTarget::whole(), 3);
    FAIL("expected PartialSequenceError");
  } catch (const PartialSequenceError& e) {
    CHECK(e.failing_n == 1);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(build_sequences(zero_ham(), ConormalTarget::whole(), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sigma(zero_ham(), ConormalTarget::whole(), 9),
                  std::invalid_argument);
  CHECK_THROWS_AS(limsup_ratio(counterexample(9), RatioSeq::A),
                  std::invalid_argument);
  CHECK_THROWS_AS(counterexample(0), std::invalid_argument);
  CHECK_THROWS_AS(counterexample(100, 0.5, 1.0 / 3.0), std::invalid_argument);
  CHECK_THROWS_AS(fekete_limit(std::vector<double>{}), std::invalid_argument);
}
