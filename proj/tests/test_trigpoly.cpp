#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conlab/rng.hpp"
#include "conlab/trigpoly.hpp"

using namespace conlab;

namespace {

// Reference evaluation straight from the defining sum.
double direct_value(const TrigPoly& f, double q) {
  double v = f.cos_coeffs()[0];
  for (int k = 1; k <= f.degree(); ++k)
    v += f.cos_coeffs()[k] * std::cos(kTwoPi * k * q) +
         f.sin_coeffs()[k] * std::sin(kTwoPi * k * q);
  return v;
}

TrigPoly random_poly(Rng& rng, int degree) {
  Eigen::ArrayXd cc(degree + 1), ss(degree);
  for (int k = 0; k <= degree; ++k) cc[k] = rng.uniform(-1.0, 1.0);
  for (int k = 0; k < degree; ++k) ss[k] = rng.uniform(-1.0, 1.0);
  return TrigPoly(cc, ss);
}

}  // namespace

TEST_CASE("recurrence evaluation matches the defining sum") {
  Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    TrigPoly f = random_poly(rng, (int)rng.uniform_int(0, 8));
    for (int i = 0; i < 20; ++i) {
      double q = rng.uniform(-2.0, 2.0);
      CHECK(f.value(q) == doctest::Approx(direct_value(f, q)).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivative matches central differences") {
  Rng rng(5);
  TrigPoly f = random_poly(rng, 6);
  for (int i = 0; i < 30; ++i) {
    double q = rng.uniform();
    double h = 1e-6;
    double fd = (f.value(q + h) - f.value(q - h)) / (2 * h);
    CHECK(f.derivative(q) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("evaluation is 1-periodic") {
  Rng rng(9);
  TrigPoly f = random_poly(rng, 5);
  for (int i = 0; i < 30; ++i) {
    double q = rng.uniform();
    CHECK(f.value(q) == doctest::Approx(f.value(q + 3.0)).epsilon(1e-12));
  }
}

TEST_CASE("derivative_bound dominates sampled derivatives") {
  Rng rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    TrigPoly f = random_poly(rng, 4);
    double b1 = f.derivative_bound(1), b2 = f.derivative_bound(2);
    for (int i = 0; i < 100; ++i) {
      double q = rng.uniform();
      CHECK(std::fabs(f.derivative(q)) <= b1 + 1e-12);
    }
    CHECK(b2 >= b1);  // frequencies at least 1 on the nonconstant part
  }
}

TEST_CASE("shifted cosine places extrema exactly") {
  double x1 = 0.6180339887498949;
  TrigPoly f = TrigPoly::shifted_cosine(x1 - 0.5);
  CHECK(f.value(x1) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(f.value(x1 + 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f.derivative(x1) == doctest::Approx(0.0).epsilon(1e-12));
  // coefficient bound: between the true sup 2pi and the l1 ceiling 2pi*sqrt(2)
  CHECK(f.derivative_bound() >= kTwoPi - 1e-12);
  CHECK(f.derivative_bound() <= kTwoPi * std::sqrt(2.0) + 1e-12);
}

TEST_CASE("simple constructors") {
  CHECK(TrigPoly::constant(2.5).value(0.37) == 2.5);
  CHECK(TrigPoly::cosine(1).value(0.5) == doctest::Approx(-1.0));
  CHECK(TrigPoly::cosine(2).value(0.5) == doctest::Approx(1.0));
  CHECK(TrigPoly::sine(1).value(0.25) == doctest::Approx(1.0));
}

TEST_CASE("degree cap enforced") {
  CHECK_THROWS_AS(TrigPoly::cosine(33), std::invalid_argument);
  CHECK_NOTHROW(TrigPoly::cosine(32));
}

TEST_CASE("arithmetic combines coefficients") {
  TrigPoly f = TrigPoly::cosine(1);
  TrigPoly g = TrigPoly::sine(2, 0.5);
  TrigPoly h = f + g * 2.0;
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    double q = rng.uniform();
    CHECK(h.value(q) == doctest::Approx(f.value(q) + 2.0 * g.value(q)).epsilon(1e-13));
  }
  TrigPoly d = f - f;
  CHECK(d.value(0.3) == doctest::Approx(0.0));
}
