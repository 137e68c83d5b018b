// test_viterbo.cpp -- rescaled generators against the rotation orbit.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "conlab/rng.hpp"
#include "conlab/viterbo.hpp"
#include "doctest.h"

using namespace conlab;

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt 5 - 1)/2

TrigPoly random_poly(Rng& rng, int degree, double scale) {
  Eigen::ArrayXd cc = Eigen::ArrayXd::Zero(degree + 1);
  Eigen::ArrayXd ss = Eigen::ArrayXd::Zero(degree);
  for (int k = 0; k <= degree; ++k) cc[k] = scale * rng.uniform(-1.0, 1.0);
  for (int k = 0; k < degree; ++k) ss[k] = scale * rng.uniform(-1.0, 1.0);
  return TrigPoly(cc, ss);
}

}  // namespace

TEST_CASE("rescaling by one returns the plain point value") {
  const TrigPoly f = TrigPoly::shifted_cosine(0.3) * 0.7;
  const double v = rescaled_spectral(f, BasePoint(0.42), 1);
  CHECK(v == doctest::Approx(f.value(0.42)).epsilon(1e-6));
}

TEST_CASE("rescaled values follow the closed form f(n x1)") {
  const TrigPoly f = TrigPoly::cosine(1);
  CHECK(rescaled_spectral(f, BasePoint(0.5), 2) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rescaled_spectral(f, BasePoint(0.25), 2) ==
        doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(rescaled_spectral(f, BasePoint(0.25), 3) ==
        doctest::Approx(std::cos(2.0 * std::numbers::pi * 0.75))
            .epsilon(1e-6));
}

TEST_CASE("fixed point of the rotation pins the whole orbit") {
  const TrigPoly f = TrigPoly::shifted_cosine(0.11) * 1.3;
  const auto ex = orbit_experiment(f, BasePoint(0.0), 200);
  for (double v : ex.rhs_sup) CHECK(v == f.value(0.0));
  CHECK(ex.lhs == f.value(0.0));
}

TEST_CASE("rational rotation stabilizes after its period") {
  const TrigPoly f = TrigPoly::cosine(1) + TrigPoly::sine(2, 0.4);
  const auto ex = orbit_experiment(f, BasePoint(3.0 / 8.0), 100);
  double finite_orbit_max = -1e300;
  for (int n = 1; n <= 8; ++n)
    finite_orbit_max =
        std::max(finite_orbit_max, f.value(circle_reduce(n * 3.0 / 8.0)));
  for (int n = 8; n <= 100; ++n)
    CHECK(ex.rhs_sup[n - 1] == finite_orbit_max);
}

TEST_CASE("golden rotation climbs to the maximum") {
  const auto ex =
      orbit_experiment(TrigPoly::cosine(1), BasePoint(kGolden), 10000);
  CHECK(ex.rhs_sup.back() >= 0.995);
  CHECK(ex.f_max == doctest::Approx(1.0));
  CHECK(ex.gap <= 5e-3);
  CHECK(ex.gap >= -1e-9);
  for (int n = 1; n < ex.n_max; ++n) {
    CHECK(ex.rhs_sup[n] >= ex.rhs_sup[n - 1]);
    CHECK(ex.rhs_sup[n] <= ex.f_max + 1e-9);
  }
  CHECK(ex.spot_checked.size() == 10);
  CHECK(ex.spot_check_dev <= 1e-6);
}

TEST_CASE("iteration and rescaling homogenize to different values") {
  // Minimum placed at the golden rotation number: the left side stays at
  // min f = -1 while the orbit supremum reaches toward max f = +1.
  const TrigPoly f = TrigPoly::shifted_cosine(kGolden + 0.5);
  const auto ex = orbit_experiment(f, BasePoint(kGolden), 10000);
  CHECK(ex.lhs == doctest::Approx(-1.0));
  CHECK(ex.rhs_sup.back() >= 0.995);
  CHECK(std::fabs(ex.lhs - ex.rhs_sup.back()) >= 1.9);
}

TEST_CASE("generic orbit stays below the refined maximum") {
  Rng rng(404);
  const TrigPoly f = random_poly(rng, 3, 0.8);
  const auto ex = orbit_experiment(f, BasePoint(0.137), 500);
  for (int n = 1; n <= 500; ++n) {
    CHECK(ex.rhs_sup[n - 1] <= ex.f_max + 1e-9);
    if (n > 1) CHECK(ex.rhs_sup[n - 1] >= ex.rhs_sup[n - 2]);
  }
  CHECK(ex.gap >= -1e-9);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(rescaled_spectral(TrigPoly::cosine(1), BasePoint(0.0), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(orbit_experiment(TrigPoly::cosine(1), BasePoint(0.0), 0),
                  std::invalid_argument);
}
