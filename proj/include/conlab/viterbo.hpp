// viterbo.hpp -- rescaled-generator comparison experiment.
//
// Homogenizing by iteration gives (1/n) ell at a point x1 the constant value
// f(x1).  Homogenizing by rescaling the generator instead samples f along the
// rotation orbit n*x1 mod 1, whose supremum climbs to max f whenever x1 is
// irrational.  The two candidate homogenizations therefore disagree by as
// much as max f - min f; this module measures that gap.

#pragma once

#include <cstdint>
#include <vector>

#include "conlab/geometry.hpp"
#include "conlab/trigpoly.hpp"

namespace conlab {

/// Orbit comparison record.  rhs_sequence[n-1] = f(n*x1 mod 1) and rhs_sup is
/// its running supremum; lhs is the iteration-homogenized constant f(x1).
struct OrbitExperiment {
  TrigPoly f;
  BasePoint x1;
  int n_max = 0;
  double lhs = 0.0;
  std::vector<double> rhs_sequence;
  std::vector<double> rhs_sup;
  double f_max = 0.0;  // refined global maximum of f
  double gap = 0.0;    // f_max - rhs_sup.back()
  std::vector<int> spot_checked;  // fold counts verified against the oracle
  double spot_check_dev = 0.0;    // worst |oracle - closed form| among them
};

/// ell at Point(x1) of the n-fold rescaled generator, computed through the
/// action-profile oracle and checked against the closed form f(n*x1 mod 1);
/// the two must agree within 1e-6.  The profile grid scales with n so the
/// oracle resolves all n oscillations of the rescaled primitive.
double rescaled_spectral(const TrigPoly& f, BasePoint x1, int n);

/// Fills the orbit record by closed form and spot-checks the oracle at ten
/// deterministic fold counts (kept small; the closed form is exact at any n).
OrbitExperiment orbit_experiment(const TrigPoly& f, BasePoint x1, int n_max,
                                 std::uint64_t seed = 12345);

}  // namespace conlab
