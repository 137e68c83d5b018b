#include "conlab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "conlab/errors.hpp"
#include "conlab/parallel.hpp"

namespace conlab {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Maximizer of f on [lo, hi] by golden-section; f need not be unimodal, the
// caller guarantees the window brackets a single best candidate.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol) {
  const double r = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

ActionProfile::ActionProfile(Eigen::ArrayXd seeds, Eigen::ArrayXd bases,
                             Eigen::ArrayXd fibers, Eigen::ArrayXd actions,
                             double monotone_margin, double refine_tol)
    : grid_((int)seeds.size()),
      seeds_(std::move(seeds)),
      bases_(std::move(bases)),
      fibers_(std::move(fibers)),
      actions_(std::move(actions)),
      error_bound_(kNan),
      refine_tol_(refine_tol) {
  if (grid_ < 8) throw std::invalid_argument("profile: grid too small");
  if (bases_.size() != grid_ || fibers_.size() != grid_ || actions_.size() != grid_)
    throw std::invalid_argument("profile: table sizes disagree");
  graphical_ = bases_.isFinite().all() && fibers_.isFinite().all() &&
               actions_.isFinite().all();
  if (!graphical_) return;
  // strict monotonicity of the lifted bases; the wraparound diff closes the
  // period, so the winding is 1 exactly when every step is positive
  for (int i = 0; i < grid_; ++i) {
    double next = i + 1 < grid_ ? bases_[i + 1] : bases_[0] + 1.0;
    if (next - bases_[i] < monotone_margin) {
      graphical_ = false;
      return;
    }
  }
}

void ActionProfile::require_graphical() const {
  if (!graphical_)
    throw OracleUnavailableError("action profile is not graphical");
}

double ActionProfile::node_pos(long j) const {
  long off = j >= 0 ? j / grid_ : -((-j + grid_ - 1) / grid_);
  return bases_[j - off * grid_] + (double)off;
}

double ActionProfile::node_action(long j) const {
  long r = j % grid_;
  return actions_[r < 0 ? r + grid_ : r];
}

double ActionProfile::node_fiber(long j) const {
  long r = j % grid_;
  return fibers_[r < 0 ? r + grid_ : r];
}

long ActionProfile::first_node_after(double x) const {
  double off = std::floor(x - bases_[0]);
  double local = x - off;
  const double* begin = bases_.data();
  long r = std::upper_bound(begin, begin + grid_, local) - begin;
  return (long)off * grid_ + r;
}

long ActionProfile::nearest_node(double x) const {
  long j = first_node_after(x);
  return x - node_pos(j - 1) <= node_pos(j) - x ? j - 1 : j;
}

double ActionProfile::s_hat(double x) const {
  require_graphical();
  double u = x - std::floor(x - bases_[0]);
  const double* begin = bases_.data();
  long j = std::upper_bound(begin, begin + grid_, u) - begin - 1;
  j = std::clamp<long>(j, 0, grid_ - 1);
  double x0 = bases_[j], y0 = actions_[j], m0 = -fibers_[j];
  long j1 = j + 1 == grid_ ? 0 : j + 1;
  double x1 = j + 1 == grid_ ? bases_[0] + 1.0 : bases_[j + 1];
  double y1 = actions_[j1], m1 = -fibers_[j1];
  double h = x1 - x0, t = (u - x0) / h;
  double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * m0 +
         (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * m1;
}

double ActionProfile::s_hat_slope(double x) const {
  require_graphical();
  double u = x - std::floor(x - bases_[0]);
  const double* begin = bases_.data();
  long j = std::upper_bound(begin, begin + grid_, u) - begin - 1;
  j = std::clamp<long>(j, 0, grid_ - 1);
  double x0 = bases_[j], y0 = actions_[j], m0 = -fibers_[j];
  long j1 = j + 1 == grid_ ? 0 : j + 1;
  double x1 = j + 1 == grid_ ? bases_[0] + 1.0 : bases_[j + 1];
  double y1 = actions_[j1], m1 = -fibers_[j1];
  double h = x1 - x0, t = (u - x0) / h;
  double t2 = t * t;
  return (6 * t2 - 6 * t) / h * y0 + (3 * t2 - 4 * t + 1) * m0 +
         (-6 * t2 + 6 * t) / h * y1 + (3 * t2 - 2 * t) * m1;
}

Extremum ActionProfile::extremize(double lo, double hi, double sign) const {
  require_graphical();
  if (!(hi >= lo) || hi - lo > 1.0 + 1e-9)
    throw std::invalid_argument("profile: arc length must lie in [0, 1]");
  auto score = [&](double x) { return sign * s_hat(x); };
  double bx = lo, bv = score(lo);
  if (double hv = score(hi); hv > bv) {
    bx = hi;
    bv = hv;
  }
  const long none = std::numeric_limits<long>::min();
  long best_node = none;
  long j0 = first_node_after(lo);
  for (long j = j0; node_pos(j) < hi; ++j) {
    double v = sign * node_action(j);
    if (v > bv) {
      bv = v;
      bx = node_pos(j);
      best_node = j;
    }
  }
  double wlo, whi;
  if (best_node != none) {
    wlo = std::max(lo, node_pos(best_node - 1));
    whi = std::min(hi, node_pos(best_node + 1));
  } else if (bx == lo) {
    wlo = lo;
    whi = std::min(hi, node_pos(j0));
  } else {
    wlo = std::max(lo, node_pos(first_node_after(hi) - 1));
    whi = hi;
  }
  if (whi > wlo) {
    double x = golden_max(score, wlo, whi, refine_tol_);
    if (double v = score(x); v > bv) {
      bv = v;
      bx = x;
    }
  }
  return {bx, sign * bv};
}

Extremum ActionProfile::max_on(double lo, double hi) const {
  return extremize(lo, hi, 1.0);
}

Extremum ActionProfile::min_on(double lo, double hi) const {
  return extremize(lo, hi, -1.0);
}

Extremum ActionProfile::global_max() const {
  return extremize(bases_[0], bases_[0] + 1.0, 1.0);
}

Extremum ActionProfile::global_min() const {
  return extremize(bases_[0], bases_[0] + 1.0, -1.0);
}

std::vector<Extremum> ActionProfile::critical_points() const {
  require_graphical();
  std::vector<Extremum> out;
  double amax = actions_.maxCoeff(), amin = actions_.minCoeff();
  if (amax - amin <= 1e-14 * (1.0 + std::fabs(amax))) {
    out.push_back({bases_[0], actions_[0]});
    return out;
  }
  for (long i = 0; i < grid_; ++i) {
    double prev = node_action(i - 1), cur = actions_[i], next = node_action(i + 1);
    bool is_max = cur >= prev && cur >= next && (cur > prev || cur > next);
    bool is_min = cur <= prev && cur <= next && (cur < prev || cur < next);
    if (!is_max && !is_min) continue;
    out.push_back(extremize(node_pos(i - 1), node_pos(i + 1), is_max ? 1.0 : -1.0));
  }
  std::sort(out.begin(), out.end(),
            [](const Extremum& a, const Extremum& b) { return a.x < b.x; });
  std::vector<Extremum> dedup;
  for (const auto& e : out) {
    if (!dedup.empty() && e.x - dedup.back().x < 2.0 / grid_ &&
        std::fabs(e.value - dedup.back().value) < 1e-10)
      continue;
    dedup.push_back(e);
  }
  return dedup;
}

void profile_stream(const Hamiltonian& h, int periods, const ProfileOptions& opts,
                    const std::function<void(int, const ActionProfile&)>& fn) {
  if (periods < 1) throw std::invalid_argument("profile: periods must be >= 1");
  if (opts.grid < 8) throw std::invalid_argument("profile: grid too small");
  if (!(opts.step > 0)) throw std::invalid_argument("profile: step must be positive");
  const int G = opts.grid;
  const double blow = default_blowup_radius(h, opts.blowup_factor);

  std::vector<Eigen::ArrayXd> b(periods, Eigen::ArrayXd(G));
  std::vector<Eigen::ArrayXd> p(periods, Eigen::ArrayXd(G));
  std::vector<Eigen::ArrayXd> a(periods, Eigen::ArrayXd(G));
  parallel_for(G, [&](std::size_t i) {
    flow_periods(h, {double(i) / G, 0.0, 0.0}, periods, opts.step, blow,
                 [&](int k, const FlowState& s) {
                   b[k - 1][i] = s.q_lift;
                   p[k - 1][i] = s.p;
                   a[k - 1][i] = s.action;
                 });
  });

  const bool with_error = opts.with_error;
  const int P = with_error ? std::min(opts.probe_count, G) : 0;
  std::vector<Eigen::ArrayXd> probe_b, probe_a;
  if (P > 0) {
    probe_b.assign(periods, Eigen::ArrayXd(P));
    probe_a.assign(periods, Eigen::ArrayXd(P));
    const int stride = G / P;
    parallel_for(P, [&](std::size_t i) {
      double q0 = (double(i * stride) + 0.5) / G;
      flow_periods(h, {q0, 0.0, 0.0}, periods, opts.step, blow,
                   [&](int k, const FlowState& s) {
                     probe_b[k - 1][i] = s.q_lift;
                     probe_a[k - 1][i] = s.action;
                   });
    });
  }

  const int R = with_error ? opts.richardson_seeds : 0;
  std::vector<Eigen::ArrayXd> rich_da, rich_db;
  if (R > 0) {
    rich_da.assign(periods, Eigen::ArrayXd(R));
    rich_db.assign(periods, Eigen::ArrayXd(R));
    parallel_for(R, [&](std::size_t i) {
      double q0 = double(i) / R;
      std::vector<double> ca(periods), cb(periods);
      flow_periods(h, {q0, 0.0, 0.0}, periods, opts.step, blow,
                   [&](int k, const FlowState& s) {
                     ca[k - 1] = s.action;
                     cb[k - 1] = s.q_lift;
                   });
      flow_periods(h, {q0, 0.0, 0.0}, periods, opts.step / 2, blow,
                   [&](int k, const FlowState& s) {
                     rich_da[k - 1][i] = std::fabs(ca[k - 1] - s.action);
                     rich_db[k - 1][i] = std::fabs(cb[k - 1] - s.q_lift);
                   });
    });
  }

  Eigen::ArrayXd seed_grid(G);
  for (int i = 0; i < G; ++i) seed_grid[i] = double(i) / G;

  for (int k = 1; k <= periods; ++k) {
    ActionProfile prof(seed_grid, b[k - 1], p[k - 1], a[k - 1],
                       opts.monotone_margin, opts.refine_tol);
    if (with_error) {
      double pmax = p[k - 1].abs().maxCoeff();
      double flow_err = 0.0;
      if (R > 0)
        flow_err = (rich_da[k - 1] + pmax * rich_db[k - 1]).maxCoeff();
      double res = 0.0;
      const auto& ak = a[k - 1];
      for (long i = 0; i < G; ++i) {
        double prev = ak[(i + G - 1) % G], next = ak[(i + 1) % G];
        res = std::max(res, std::fabs(next - 2 * ak[i] + prev) / 8.0);
      }
      double probe_err = 0.0;
      if (prof.graphical())
        for (int i = 0; i < P; ++i)
          probe_err = std::max(
              probe_err, std::fabs(prof.s_hat(probe_b[k - 1][i]) - probe_a[k - 1][i]));
      prof.set_error_bound(flow_err + res + probe_err);
    }
    fn(k, prof);
  }
}

ActionProfile action_profile(const Hamiltonian& h, const ProfileOptions& opts) {
  std::optional<ActionProfile> out;
  profile_stream(h, 1, opts, [&](int, const ActionProfile& p) { out = p; });
  return std::move(*out);
}

}  // namespace conlab
