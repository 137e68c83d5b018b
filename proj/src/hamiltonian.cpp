#include "conlab/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

namespace conlab {

namespace detail {

// g(x) = exp(-1/x) extended by 0; the classic smooth partition ingredient.
static double g(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
static double g_prime(double x) {
  return x > 0.0 ? std::exp(-1.0 / x) / (x * x) : 0.0;
}

double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double a = g(u), b = g(1.0 - u);
  return a / (a + b);
}

double smooth_step_derivative(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  double a = g(u), b = g(1.0 - u);
  double ap = g_prime(u), bp = -g_prime(1.0 - u);
  double s = a + b;
  return (ap * s - a * (ap + bp)) / (s * s);
}

double smooth_bump(double u) {
  double w = 1.0 - u * u;
  if (w <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / w);
}

double smooth_bump_derivative(double u) {
  double w = 1.0 - u * u;
  if (w <= 0.0) return 0.0;
  return smooth_bump(u) * (-2.0 * u / (w * w));
}

double cutoff_value(const CutoffSpec& c, double p) {
  double ap = std::fabs(p);
  if (ap <= c.inner_radius) return 1.0;
  if (ap >= c.outer_radius) return 0.0;
  return smooth_step((c.outer_radius - ap) /
                     (c.outer_radius - c.inner_radius));
}

double cutoff_derivative(const CutoffSpec& c, double p) {
  double ap = std::fabs(p);
  if (ap <= c.inner_radius || ap >= c.outer_radius) return 0.0;
  double width = c.outer_radius - c.inner_radius;
  double d = smooth_step_derivative((c.outer_radius - ap) / width) / -width;
  return p < 0.0 ? -d : d;
}

}  // namespace detail

namespace {

// Arc containment of circular intervals, each given as (center, radius).
bool q_arcs_disjoint(const std::pair<double, double>& a,
                     const std::pair<double, double>& b) {
  // Arcs as ccw (start, end); disjoint iff neither start lies in the other.
  auto inside = [](const std::pair<double, double>& arc, double x) {
    double len = ccw_arc_length(arc.first, arc.second);
    return ccw_arc_length(arc.first, x) <= len;
  };
  return !inside(a, b.first) && !inside(b, a.first) && !inside(a, b.second) &&
         !inside(b, a.second);
}

bool p_intervals_disjoint(const std::pair<double, double>& a,
                          const std::pair<double, double>& b) {
  return a.second < b.first || b.second < a.first;
}

// Lifted-shaped specs depend only on the base point throughout the region
// where their cutoffs are flat, so their flows commute there.
bool lifted_shaped(const Hamiltonian& h) {
  const auto& n = h.node();
  if (std::holds_alternative<LiftedNode>(n)) return true;
  if (auto* s = std::get_if<ScaleNode>(&n)) return lifted_shaped(*s->inner);
  if (auto* s = std::get_if<IterateNode>(&n)) return lifted_shaped(*s->inner);
  if (auto* s = std::get_if<InverseNode>(&n)) return lifted_shaped(*s->inner);
  if (auto* s = std::get_if<ViterboNode>(&n)) return lifted_shaped(*s->inner);
  if (auto* s = std::get_if<SumNode>(&n)) {
    for (const auto& m : s->members)
      if (!lifted_shaped(*m)) return false;
    return true;
  }
  return false;
}

void flatten(const Hamiltonian& h, double start, double duration, double factor,
             std::vector<ProtocolSegment>& out) {
  if (h.time_independent()) {
    out.push_back({start, duration, factor, &h});
    return;
  }
  const auto& n = h.node();
  if (auto* c = std::get_if<ComposeNode>(&n)) {
    flatten(*c->before, start, duration / 2, factor * 2, out);
    flatten(*c->after, start + duration / 2, duration / 2, factor * 2, out);
    return;
  }
  if (auto* inv = std::get_if<InverseNode>(&n)) {
    std::vector<ProtocolSegment> inner;
    flatten(*inv->inner, 0.0, duration, factor, inner);
    double at = start;
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
      out.push_back({at, it->duration, -it->factor, it->leaf});
      at += it->duration;
    }
    return;
  }
  if (auto* itn = std::get_if<IterateNode>(&n)) {
    double sub = duration / itn->count;
    for (int i = 0; i < itn->count; ++i)
      flatten(*itn->inner, start + i * sub, sub, factor * itn->count, out);
    return;
  }
  if (auto* sc = std::get_if<ScaleNode>(&n)) {
    flatten(*sc->inner, start, duration, factor * sc->factor, out);
    return;
  }
  throw std::logic_error("flatten: unexpected time-dependent node");
}

}  // namespace

Hamiltonian::Hamiltonian(Node node) : node_(std::move(node)) {
  struct Init {
    bool time_independent;
    double radius;
    std::pair<double, double> p_int;
    std::optional<std::pair<double, double>> q_arc;
  };
  auto init = std::visit(
      [](const auto& n) -> Init {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LiftedNode>) {
          double r = n.cutoff.outer_radius;
          return {true, r, {-r, r}, std::nullopt};
        } else if constexpr (std::is_same_v<T, BumpNode>) {
          if (!(n.rq > 0.0) || !(n.rp > 0.0))
            throw std::invalid_argument("bump: radii must be positive");
          if (n.rq >= 0.5)
            throw std::invalid_argument("bump: base radius must be < 1/2");
          double r = std::fabs(n.p0) + n.rp;
          return {true,
                  r,
                  {n.p0 - n.rp, n.p0 + n.rp},
                  std::pair<double, double>{circle_reduce(n.q0.q - n.rq),
                                            circle_reduce(n.q0.q + n.rq)}};
        } else if constexpr (std::is_same_v<T, ScaleNode>) {
          return {n.inner->time_independent(), n.inner->support_radius(),
                  n.inner->support_p_interval(), n.inner->support_q_arc()};
        } else if constexpr (std::is_same_v<T, SumNode>) {
          if (n.members.empty())
            throw std::invalid_argument("sum: needs at least one member");
          double r = 0.0;
          auto pi = n.members.front()->support_p_interval();
          bool all_q = true;
          for (const auto& m : n.members) {
            if (!m->time_independent())
              throw std::invalid_argument("sum: members must be time-independent");
            r = std::max(r, m->support_radius());
            auto mp = m->support_p_interval();
            pi.first = std::min(pi.first, mp.first);
            pi.second = std::max(pi.second, mp.second);
            all_q = all_q && m->support_q_arc().has_value();
          }
          for (size_t i = 0; i < n.members.size(); ++i)
            for (size_t j = i + 1; j < n.members.size(); ++j)
              if (!sum_legal(*n.members[i], *n.members[j]))
                throw std::invalid_argument(
                    "sum: members neither support-disjoint nor commuting");
          // Hull of base arcs is not needed downstream; keep whole circle
          // unless there is a single member.
          std::optional<std::pair<double, double>> qa;
          if (n.members.size() == 1) qa = n.members.front()->support_q_arc();
          return {true, r, pi, qa};
        } else if constexpr (std::is_same_v<T, ComposeNode>) {
          double r = std::max(n.after->support_radius(),
                              n.before->support_radius());
          auto pa = n.after->support_p_interval();
          auto pb = n.before->support_p_interval();
          return {false,
                  r,
                  {std::min(pa.first, pb.first), std::max(pa.second, pb.second)},
                  std::nullopt};
        } else if constexpr (std::is_same_v<T, InverseNode>) {
          return {n.inner->time_independent(), n.inner->support_radius(),
                  n.inner->support_p_interval(), n.inner->support_q_arc()};
        } else if constexpr (std::is_same_v<T, IterateNode>) {
          if (n.count < 1) throw std::invalid_argument("iterate: count >= 1");
          return {n.inner->time_independent(), n.inner->support_radius(),
                  n.inner->support_p_interval(), n.inner->support_q_arc()};
        } else {
          static_assert(std::is_same_v<T, ViterboNode>);
          if (n.fold < 1) throw std::invalid_argument("viterbo: fold >= 1");
          if (!n.inner->time_independent())
            throw std::invalid_argument("viterbo: inner must be autonomous");
          return {true, n.inner->support_radius(),
                  n.inner->support_p_interval(), std::nullopt};
        }
      },
      node_);
  time_independent_ = init.time_independent;
  support_radius_ = init.radius;
  p_interval_ = init.p_int;
  q_arc_ = init.q_arc;
  flatten(*this, 0.0, 1.0, 1.0, protocol_);
}

bool sum_legal(const Hamiltonian& a, const Hamiltonian& b) {
  if (p_intervals_disjoint(a.support_p_interval(), b.support_p_interval()))
    return true;
  auto qa = a.support_q_arc(), qb = b.support_q_arc();
  if (qa && qb && q_arcs_disjoint(*qa, *qb)) return true;
  return lifted_shaped(a) && lifted_shaped(b);
}

HamRef lifted(TrigPoly f, CutoffSpec cutoff) {
  return std::make_shared<Hamiltonian>(LiftedNode{std::move(f), cutoff});
}

HamRef bump(double q0, double p0, double rq, double rp, double amplitude) {
  return std::make_shared<Hamiltonian>(
      BumpNode{BasePoint(q0), p0, rq, rp, amplitude});
}

HamRef scale(double s, HamRef inner) {
  return std::make_shared<Hamiltonian>(ScaleNode{s, std::move(inner)});
}

HamRef sum(std::vector<HamRef> members) {
  return std::make_shared<Hamiltonian>(SumNode{std::move(members)});
}

HamRef compose(HamRef after, HamRef before) {
  return std::make_shared<Hamiltonian>(
      ComposeNode{std::move(after), std::move(before)});
}

HamRef inverse(HamRef inner) {
  return std::make_shared<Hamiltonian>(InverseNode{std::move(inner)});
}

HamRef iterate(HamRef inner, int count) {
  return std::make_shared<Hamiltonian>(IterateNode{std::move(inner), count});
}

HamRef viterbo_rescale(HamRef inner, int fold) {
  return std::make_shared<Hamiltonian>(ViterboNode{std::move(inner), fold});
}

HamRef zero_ham() {
  return lifted(TrigPoly::constant(0.0), CutoffSpec(1.0, 3.0));
}

CutoffSpec auto_cutoff(const TrigPoly& f, double horizon) {
  double r0 = 1.0 + std::max(1.0, horizon) * f.derivative_bound();
  return CutoffSpec(r0, r0 + 2.0);
}

HamRef lifted_auto(TrigPoly f, double horizon) {
  CutoffSpec c = auto_cutoff(f, horizon);
  return lifted(std::move(f), c);
}

HamEval eval_static(const Hamiltonian& h, double q, double p) {
  return std::visit(
      [&](const auto& n) -> HamEval {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LiftedNode>) {
          auto fe = n.f.eval(q);
          double chi = detail::cutoff_value(n.cutoff, p);
          if (chi == 0.0) return {0.0, 0.0, 0.0};
          double dchi = detail::cutoff_derivative(n.cutoff, p);
          return {fe.value * chi, fe.derivative * chi, fe.value * dchi};
        } else if constexpr (std::is_same_v<T, BumpNode>) {
          double up = (p - n.p0) / n.rp;
          double bp = detail::smooth_bump(up);
          if (bp == 0.0) return {0.0, 0.0, 0.0};
          double uq = circle_signed_diff(n.q0.q, circle_reduce(q)) / n.rq;
          double bq = detail::smooth_bump(uq);
          if (bq == 0.0) return {0.0, 0.0, 0.0};
          double dbq = detail::smooth_bump_derivative(uq) / n.rq;
          double dbp = detail::smooth_bump_derivative(up) / n.rp;
          return {n.amplitude * bq * bp, n.amplitude * dbq * bp,
                  n.amplitude * bq * dbp};
        } else if constexpr (std::is_same_v<T, ScaleNode>) {
          HamEval e = eval_static(*n.inner, q, p);
          return {n.factor * e.value, n.factor * e.dq, n.factor * e.dp};
        } else if constexpr (std::is_same_v<T, SumNode>) {
          HamEval acc{0.0, 0.0, 0.0};
          for (const auto& m : n.members) {
            HamEval e = eval_static(*m, q, p);
            acc.value += e.value;
            acc.dq += e.dq;
            acc.dp += e.dp;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, InverseNode>) {
          HamEval e = eval_static(*n.inner, q, p);
          return {-e.value, -e.dq, -e.dp};
        } else if constexpr (std::is_same_v<T, IterateNode>) {
          HamEval e = eval_static(*n.inner, q, p);
          double c = n.count;
          return {c * e.value, c * e.dq, c * e.dp};
        } else if constexpr (std::is_same_v<T, ViterboNode>) {
          HamEval e = eval_static(*n.inner, n.fold * q, p);
          return {e.value, n.fold * e.dq, e.dp};
        } else {
          throw std::logic_error("eval_static: time-dependent node");
        }
      },
      h.node());
}

double evaluate(const Hamiltonian& h, const PhasePoint& z, double t) {
  if (t < 0.0 || t > 1.0)
    throw std::domain_error("evaluate: protocol time outside [0,1]");
  const auto& segs = h.protocol();
  const ProtocolSegment* pick = &segs.back();
  for (const auto& s : segs) {
    if (t < s.start + s.duration) {
      pick = &s;
      break;
    }
  }
  return pick->factor * eval_static(*pick->leaf, z.q.q, z.p).value;
}

}  // namespace conlab
