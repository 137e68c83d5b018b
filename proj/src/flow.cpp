#include "conlab/flow.hpp"

#include <cmath>
#include <string>

#include "conlab/errors.hpp"

namespace conlab {

namespace {

struct Derivs {
  double dq, dp, da;
};

inline Derivs rhs(const Hamiltonian& leaf, double factor, double q, double p) {
  HamEval e = eval_static(leaf, q, p);
  double qdot = factor * e.dp;
  return {qdot, -factor * e.dq, -p * qdot + factor * e.value};
}

inline void rk4_step(const Hamiltonian& leaf, double factor, double h,
                     FlowState& s) {
  Derivs k1 = rhs(leaf, factor, s.q_lift, s.p);
  Derivs k2 = rhs(leaf, factor, s.q_lift + 0.5 * h * k1.dq, s.p + 0.5 * h * k1.dp);
  Derivs k3 = rhs(leaf, factor, s.q_lift + 0.5 * h * k2.dq, s.p + 0.5 * h * k2.dp);
  Derivs k4 = rhs(leaf, factor, s.q_lift + h * k3.dq, s.p + h * k3.dp);
  s.q_lift += h / 6.0 * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq);
  s.p += h / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
  s.action += h / 6.0 * (k1.da + 2.0 * k2.da + 2.0 * k3.da + k4.da);
}

[[noreturn]] void throw_blowup(double p, double radius) {
  throw FlowBlowupError("flow: |p| = " + std::to_string(std::fabs(p)) +
                        " exceeded blow-up radius " + std::to_string(radius));
}

// Uniform substeps covering `span` protocol units of one segment.
template <class StepCb>
void run_segment(const Hamiltonian& leaf, double factor, FlowState& s,
                 double t_base, double span, double step, double blowup_radius,
                 StepCb&& on_step) {
  int nsteps = std::max(1, (int)std::ceil(span / step - 1e-9));
  double hstep = span / nsteps;
  for (int i = 0; i < nsteps; ++i) {
    rk4_step(leaf, factor, hstep, s);
    if (std::fabs(s.p) > blowup_radius || !std::isfinite(s.p) ||
        !std::isfinite(s.q_lift))
      throw_blowup(s.p, blowup_radius);
    on_step(t_base + (i + 1) * hstep, s);
  }
}

// One full protocol period starting at wall time t_base.
template <class StepCb>
void run_period(const Hamiltonian& h, FlowState& s, double t_base, double step,
                double blowup_radius, StepCb&& on_step) {
  for (const auto& seg : h.protocol())
    run_segment(*seg.leaf, seg.factor, s, t_base + seg.start, seg.duration,
                step, blowup_radius, on_step);
}

// Leading `fraction` (< 1) of a period starting at wall time t_base.
template <class StepCb>
void run_partial_period(const Hamiltonian& h, FlowState& s, double t_base,
                        double fraction, double step, double blowup_radius,
                        StepCb&& on_step) {
  const double eps = 1e-12;
  for (const auto& seg : h.protocol()) {
    if (seg.start >= fraction - eps) break;
    double span = std::min(seg.duration, fraction - seg.start);
    run_segment(*seg.leaf, seg.factor, s, t_base + seg.start, span, step,
                blowup_radius, on_step);
  }
}

// Integration over [0, T]; the unit protocol tiles with period 1. Period
// boundaries are always step boundaries, so checkpointed runs agree bitwise
// with uninterrupted ones.
template <class StepCb>
void integrate(const Hamiltonian& h, FlowState& s, double T, double step,
               double blowup_radius, StepCb&& on_step) {
  long long whole = (long long)std::floor(T + 1e-12);
  for (long long m = 0; m < whole; ++m)
    run_period(h, s, (double)m, step, blowup_radius, on_step);
  double rem = T - (double)whole;
  if (rem > 1e-12)
    run_partial_period(h, s, (double)whole, rem, step, blowup_radius, on_step);
}

}  // namespace

double default_blowup_radius(const Hamiltonian& h, double factor) {
  return factor * std::max(h.support_radius(), 1.0);
}

FlowState flow_endpoint(const Hamiltonian& h, FlowState s, double T,
                        double step, double blowup_radius) {
  integrate(h, s, T, step, blowup_radius, [](double, const FlowState&) {});
  return s;
}

void flow_periods(const Hamiltonian& h, FlowState s, int periods, double step,
                  double blowup_radius,
                  const std::function<void(int, const FlowState&)>& cb) {
  auto ignore = [](double, const FlowState&) {};
  for (int k = 1; k <= periods; ++k) {
    run_period(h, s, k - 1.0, step, blowup_radius, ignore);
    cb(k, s);
  }
}

FlowTrajectory flow(const Hamiltonian& h, const PhasePoint& z, double T,
                    const FlowOptions& opts) {
  if (!(opts.step > 0.0)) throw std::invalid_argument("flow: step must be > 0");
  if (!(T >= 0.0)) throw std::invalid_argument("flow: negative time");
  double radius = default_blowup_radius(h, opts.blowup_factor);

  FlowTrajectory out;
  out.start = z;
  out.time = T;
  out.step = opts.step;

  long long total_steps = (long long)std::ceil(T / opts.step);
  long long stride = std::max(1LL, total_steps / std::max(1, opts.max_samples - 1));

  FlowState s{z.q.q, z.p, 0.0};
  out.samples.push_back({0.0, s.q_lift, s.p, s.action});
  long long count = 0;
  integrate(h, s, T, opts.step, radius, [&](double t, const FlowState& cur) {
    if (++count % stride == 0)
      out.samples.push_back({t, cur.q_lift, cur.p, cur.action});
  });
  if (out.samples.back().t != T)
    out.samples.push_back({T, s.q_lift, s.p, s.action});
  out.action = s.action;

  if (opts.with_error_estimate && T > 0.0) {
    FlowState fine{z.q.q, z.p, 0.0};
    integrate(h, fine, T, opts.step * 0.5, radius,
              [](double, const FlowState&) {});
    out.error_estimate = std::fabs(fine.q_lift - s.q_lift) +
                         std::fabs(fine.p - s.p) +
                         std::fabs(fine.action - s.action);
  }
  return out;
}

}  // namespace conlab
