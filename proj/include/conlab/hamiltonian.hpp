// hamiltonian.hpp -- closed catalog of compactly supported Hamiltonians on
// the cotangent bundle of the circle, with exact partial derivatives and a
// flattened unit-time protocol for the integrator.
#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "conlab/geometry.hpp"
#include "conlab/trigpoly.hpp"

namespace conlab {

/// Momentum cutoff: multiplier chi(|p|) equal to 1 for |p| <= inner_radius,
/// 0 for |p| >= outer_radius, smooth and monotone between.
struct CutoffSpec {
  double inner_radius;
  double outer_radius;
  CutoffSpec(double r0, double r1) : inner_radius(r0), outer_radius(r1) {
    if (!(r0 > 0.0) || !(r1 > r0))
      throw std::invalid_argument("CutoffSpec: need 0 < inner < outer");
  }
};

class Hamiltonian;
using HamRef = std::shared_ptr<const Hamiltonian>;

struct LiftedNode {
  TrigPoly f;
  CutoffSpec cutoff;
};
struct BumpNode {
  BasePoint q0;
  double p0, rq, rp, amplitude;
};
struct ScaleNode {
  double factor;
  HamRef inner;
};
struct SumNode {
  std::vector<HamRef> members;
};
struct ComposeNode {
  HamRef after, before;  // time-1 map = map(after) o map(before)
};
struct InverseNode {
  HamRef inner;
};
struct IterateNode {
  HamRef inner;
  int count;
};
struct ViterboNode {
  HamRef inner;  // time-independent; evaluated at (fold*q mod 1, p)
  int fold;
};

struct HamEval {
  double value, dq, dp;
};

/// One autonomous piece of the flattened unit-time protocol: on the protocol
/// subinterval [start, start+duration) the generator is factor * leaf.
struct ProtocolSegment {
  double start, duration, factor;
  const Hamiltonian* leaf;
};

/// Catalog element. Immutable after construction; construction flattens the
/// time protocol and caches support data, so evaluation needs no tree walk
/// beyond the time-independent leaf.
class Hamiltonian {
 public:
  using Node = std::variant<LiftedNode, BumpNode, ScaleNode, SumNode,
                            ComposeNode, InverseNode, IterateNode, ViterboNode>;

  explicit Hamiltonian(Node node);

  const Node& node() const { return node_; }
  /// True when the generator has no protocol time-dependence.
  bool time_independent() const { return time_independent_; }
  /// R with H == 0 outside {|p| <= R}; conservative.
  double support_radius() const { return support_radius_; }
  /// Closed momentum interval containing the support.
  std::pair<double, double> support_p_interval() const { return p_interval_; }
  /// Base support arc (ccw from first to second) when not the whole circle.
  std::optional<std::pair<double, double>> support_q_arc() const {
    return q_arc_;
  }
  const std::vector<ProtocolSegment>& protocol() const { return protocol_; }

 private:
  Node node_;
  bool time_independent_;
  double support_radius_;
  std::pair<double, double> p_interval_;
  std::optional<std::pair<double, double>> q_arc_;
  std::vector<ProtocolSegment> protocol_;
};

// Catalog constructors.
HamRef lifted(TrigPoly f, CutoffSpec cutoff);
HamRef bump(double q0, double p0, double rq, double rp, double amplitude);
HamRef scale(double s, HamRef inner);
/// Members must be pairwise support-disjoint or commuting by shape.
HamRef sum(std::vector<HamRef> members);
HamRef compose(HamRef after, HamRef before);
HamRef inverse(HamRef inner);
HamRef iterate(HamRef inner, int count);
HamRef viterbo_rescale(HamRef inner, int fold);
HamRef zero_ham();

/// Cutoff sized so flows of up to `horizon` protocol periods never reach the
/// transition annulus: inner radius 1 + horizon * sup|f'|.
CutoffSpec auto_cutoff(const TrigPoly& f, double horizon);
HamRef lifted_auto(TrigPoly f, double horizon);

/// Value and partials of a time-independent spec at (q, p); q not reduced
/// (every leaf is 1-periodic in q by construction).
HamEval eval_static(const Hamiltonian& h, double q, double p);

/// H(z, t) for protocol time t in [0,1]; resolves the flattened schedule.
double evaluate(const Hamiltonian& h, const PhasePoint& z, double t);

/// True when the member pair is a legal Sum combination.
bool sum_legal(const Hamiltonian& a, const Hamiltonian& b);

namespace detail {
/// Smooth monotone step: 0 for u <= 0, 1 for u >= 1.
double smooth_step(double u);
double smooth_step_derivative(double u);
/// Smooth bump on (-1,1): b(0) = 1, vanishing to all orders at |u| = 1.
double smooth_bump(double u);
double smooth_bump_derivative(double u);
/// chi(|p|) for the cutoff and its p-derivative.
double cutoff_value(const CutoffSpec& c, double p);
double cutoff_derivative(const CutoffSpec& c, double p);
}  // namespace detail

}  // namespace conlab
