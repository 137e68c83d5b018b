// flow.hpp -- fixed-step 4th-order flow of catalog Hamiltonians with action
// accumulation and step-halving error estimates.
#pragma once

#include <functional>
#include <vector>

#include "conlab/geometry.hpp"
#include "conlab/hamiltonian.hpp"

namespace conlab {

struct FlowOptions {
  double step = 1e-3;           // integrator step per protocol unit
  double blowup_factor = 10.0;  // abort when |p| > factor * support radius
  bool with_error_estimate = true;
  int max_samples = 2049;  // stored samples are decimated to at most this
};

/// Integrator state: lifted base coordinate (not reduced), momentum, and the
/// accumulated action integral of -p dq/dt + H.
struct FlowState {
  double q_lift = 0.0;
  double p = 0.0;
  double action = 0.0;
};

struct TrajectorySample {
  double t;
  double q_lift;
  double p;
  double action;
};

struct FlowTrajectory {
  PhasePoint start;
  std::vector<TrajectorySample> samples;  // time-ordered, covers [0, T]
  double time = 0.0;
  double step = 0.0;
  double action = 0.0;
  double error_estimate = 0.0;

  PhasePoint endpoint() const {
    const auto& s = samples.back();
    return PhasePoint(circle_reduce(s.q_lift), s.p);
  }
  double endpoint_lift() const { return samples.back().q_lift; }
};

double default_blowup_radius(const Hamiltonian& h, double factor = 10.0);

/// Endpoint-only integration over [0, T]; T counts protocol periods, and the
/// unit protocol tiles periodically past T = 1.
FlowState flow_endpoint(const Hamiltonian& h, FlowState s, double T,
                        double step, double blowup_radius);

/// Integrates over [0, periods], invoking cb(k, state) after each whole
/// period k = 1..periods. One pass provides all iterate endpoints.
void flow_periods(const Hamiltonian& h, FlowState s, int periods, double step,
                  double blowup_radius,
                  const std::function<void(int, const FlowState&)>& cb);

/// Full trajectory record with Richardson error estimate.
FlowTrajectory flow(const Hamiltonian& h, const PhasePoint& z, double T,
                    const FlowOptions& opts = {});

}  // namespace conlab
