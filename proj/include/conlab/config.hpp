// config.hpp -- experiment configuration: a small on-disk record that
// round-trips losslessly and rejects anything it does not understand.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conlab/geometry.hpp"
#include "conlab/hamiltonian.hpp"

namespace conlab {

struct ExperimentConfig {
  // Generator recipe: cos[k] multiplies cos(2 pi k q) (cos[0] is the
  // constant), sin[k-1] multiplies sin(2 pi k q).  horizon 0 = size the
  // cutoff automatically from n_max.
  std::vector<double> cos_coeffs = {0.0, 1.0};
  std::vector<double> sin_coeffs = {};
  double horizon = 0.0;

  ConormalTarget target = ConormalTarget::point(0.5);
  int n_max = 40;
  std::uint64_t seed = 2026;
  double tol = 1e-5;
  int grid = 256;
  int trials = 200;
  std::string out_dir = ".";

  /// Strict parse; unknown keys anywhere are a ConfigError.
  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig load(const std::string& path);

  /// Inverse of parse: parse(serialize()) reproduces every field exactly.
  std::string serialize() const;

  void validate() const;  // throws ConfigError
  TrigPoly poly() const;
  HamRef hamiltonian() const;  // lifted flow of poly() under the cutoff
};

}  // namespace conlab
