// homogenize.cpp -- sequence campaigns, property checks, limsup estimation.

#include "conlab/homogenize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "conlab/errors.hpp"
#include "conlab/rng.hpp"
#include "conlab/spectral.hpp"

namespace conlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string witness_n(int n) {
  std::ostringstream os;
  os << "n=" << n;
  return os.str();
}

std::string witness_mn(int m, int n) {
  std::ostringstream os;
  os << "m=" << m << ",n=" << n;
  return os.str();
}

/// Shared limsup estimator.  ratios[i] is the value at n = i + 1.
LimsupEstimate estimate_limsup(const std::vector<double>& ratios,
                               double cluster_tol) {
  const int n_max = (int)ratios.size();
  if (n_max < 10)
    throw std::invalid_argument("limsup estimate needs n_max >= 10");
  if (!(cluster_tol > 0.0))
    throw std::invalid_argument("cluster tolerance must be positive");

  LimsupEstimate est;
  est.tail_window = (n_max + 9) / 10;
  est.value = -kInf;
  for (int i = n_max - est.tail_window; i < n_max; ++i)
    est.value = std::max(est.value, ratios[i]);

  // Accumulation candidates: local extrema of the tail.  Phase turns of an
  // oscillating sequence are strict extrema, while points inside a monotone
  // ramp are not, so the clusters see only the turning values.
  const int tail_start = (n_max + 15) / 16;  // 1-indexed
  std::vector<double> cands;
  for (int i = std::max(1, tail_start - 1); i + 1 < n_max; ++i) {
    const double lo = ratios[i - 1], mid = ratios[i], hi = ratios[i + 1];
    const bool peak = mid >= lo && mid >= hi && (mid > lo || mid > hi);
    const bool trough = mid <= lo && mid <= hi && (mid < lo || mid < hi);
    if (peak || trough) cands.push_back(mid);
  }
  if (cands.empty()) {
    // Monotone or constant tail: cluster a bounded subsample of the final
    // window instead.
    const int first = n_max - est.tail_window;
    const int take = std::min(est.tail_window, 256);
    for (int i = 0; i < take; ++i)
      cands.push_back(ratios[first + (long long)i * est.tail_window / take]);
  }

  std::sort(cands.begin(), cands.end());
  std::vector<std::pair<double, int>> clusters;
  double sum = cands[0];
  int count = 1;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (cands[i] - cands[i - 1] > cluster_tol) {
      clusters.emplace_back(sum / count, count);
      sum = 0.0;
      count = 0;
    }
    sum += cands[i];
    ++count;
  }
  clusters.emplace_back(sum / count, count);
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  est.accumulation_points = std::move(clusters);
  est.converged = est.accumulation_points.size() == 1;
  return est;
}

void fill_ratios(SequencePair& s) {
  s.a_ratio.resize(s.a.size());
  s.b_ratio.resize(s.b.size());
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    s.a_ratio[i] = s.a[i] / double(i + 1);
    s.b_ratio[i] = s.b[i] / double(i + 1);
  }
}

}  // namespace

const PropertyCheck* PropertyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

SequencePair build_sequences(const HamRef& h, const ConormalTarget& target,
                             int n_max, const SequenceOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("build_sequences: n_max >= 1");

  const ClassLabel label = canonical_label(target);
  std::vector<double> ell_n(n_max), ell_m(n_max);
  double worst_eb = 0.0;
  auto take_eb = [&worst_eb](double e) {
    if (std::isnan(e) || std::isnan(worst_eb))
      worst_eb = std::numeric_limits<double>::quiet_NaN();
    else
      worst_eb = std::max(worst_eb, e);
  };
  profile_stream(*h, n_max, opts.profile,
                 [&](int k, const ActionProfile& prof) {
                   if (!prof.graphical()) {
                     std::ostringstream os;
                     os << "iterate " << k << " is not graphical";
                     throw PartialSequenceError(os.str(), k);
                   }
                   ell_n[k - 1] = ell_plus(prof, target, label).value;
                   ell_m[k - 1] = prof.global_max().value;
                   take_eb(prof.error_bound());
                 });

  const ActionProfile inv_profile = action_profile(*inverse(h), opts.profile);
  if (!inv_profile.graphical())
    throw OracleUnavailableError(
        "build_sequences: inverse image is not graphical");
  const double ell_inv = inv_profile.global_max().value;
  take_eb(inv_profile.error_bound());

  SequencePair s;
  s.n_max = n_max;
  s.error_bound = worst_eb;
  s.a.resize(n_max);
  s.b.resize(n_max);
  double max_inc = ell_n[0];  // ell_N(phi^0) = 0
  for (int k = 1; k <= n_max; ++k) {
    s.a[k - 1] = k * ell_inv + ell_n[k - 1];
    s.b[k - 1] = k * ell_inv + ell_m[k - 1];
    if (k >= 2) max_inc = std::max(max_inc, ell_n[k - 1] - ell_n[k - 2]);
  }
  s.C = std::max(0.0, std::fabs(ell_inv) + max_inc);
  s.ell_n = std::move(ell_n);
  s.ell_m = std::move(ell_m);
  s.ell_inv = ell_inv;
  fill_ratios(s);
  return s;
}

PropertyReport check_properties(const SequencePair& s, int sample_pairs,
                                double tol, std::uint64_t seed) {
  const int n_max = s.n_max;
  if (n_max < 1 || (int)s.a.size() != n_max || (int)s.b.size() != n_max)
    throw std::invalid_argument("check_properties: malformed sequence pair");
  if (sample_pairs < 1)
    throw std::invalid_argument("check_properties: sample_pairs >= 1");

  PropertyReport report;
  report.tol = tol;

  auto consider = [&](PropertyCheck& c, double margin, std::string w) {
    if (margin < -tol && c.first_violation.empty()) c.first_violation = w;
    if (margin < c.margin) {
      c.margin = margin;
      c.witness = std::move(w);
    }
  };

  // Crossed subadditivity a_{m+n} <= a_n + b_m.  Exhaustive when the budget
  // covers every pair, random otherwise.
  {
    PropertyCheck c;
    c.name = "crossed-subadditive";
    c.margin = kInf;
    const long long total = (long long)(n_max - 1) * n_max / 2;
    auto pair_margin = [&](int m, int n) {
      consider(c, s.a[n - 1] + s.b[m - 1] - s.a[m + n - 1], witness_mn(m, n));
    };
    if (total <= sample_pairs) {
      for (int m = 1; m < n_max; ++m)
        for (int n = 1; m + n <= n_max; ++n) pair_margin(m, n);
    } else {
      Rng rng(seed);
      for (int t = 0; t < sample_pairs; ++t) {
        const int n = (int)rng.uniform_int(1, n_max - 1);
        const int m = (int)rng.uniform_int(1, n_max - n);
        pair_margin(m, n);
      }
    }
    report.checks.push_back(c);
  }

  {
    PropertyCheck c;
    c.name = "nonnegative";
    c.margin = kInf;
    for (int n = 1; n <= n_max; ++n)
      consider(c, std::min(s.a[n - 1], s.b[n - 1]), witness_n(n));
    report.checks.push_back(c);
  }

  {
    PropertyCheck c;
    c.name = "a-dominated-by-b";
    c.margin = kInf;
    for (int n = 1; n <= n_max; ++n)
      consider(c, s.b[n - 1] - s.a[n - 1], witness_n(n));
    report.checks.push_back(c);
  }

  {
    PropertyCheck c;
    c.name = "nondecreasing";
    c.margin = kInf;
    for (int n = 1; n < n_max; ++n)
      consider(c, s.a[n] - s.a[n - 1], witness_n(n));
    report.checks.push_back(c);
  }

  {
    PropertyCheck c;
    c.name = "increments-bounded";
    c.margin = kInf;
    for (int n = 1; n < n_max; ++n)
      consider(c, s.C - (s.a[n] - s.a[n - 1]), witness_n(n));
    report.checks.push_back(c);
  }

  report.all_pass = true;
  for (auto& c : report.checks) {
    c.pass = c.margin >= -tol;
    report.all_pass = report.all_pass && c.pass;
  }
  return report;
}

LimsupEstimate limsup_ratio(const SequencePair& s, RatioSeq which,
                            double cluster_tol) {
  const auto& ratios = which == RatioSeq::A ? s.a_ratio : s.b_ratio;
  if ((int)ratios.size() != s.n_max)
    throw std::invalid_argument("limsup_ratio: ratios not filled");
  return estimate_limsup(ratios, cluster_tol);
}

FeketeReport fekete_limit(const std::vector<double>& b, int sample_pairs,
                          std::uint64_t seed) {
  const int n_max = (int)b.size();
  if (n_max < 1) throw std::invalid_argument("fekete_limit: empty sequence");

  // Subadditivity gate; the tiny slack absorbs float noise in oracle-built
  // sequences without masking a real violation.
  const double slack = 1e-9 * (1.0 + std::fabs(b[n_max - 1]));
  auto verify = [&](int m, int n) {
    if (b[m + n - 1] > b[m - 1] + b[n - 1] + slack) {
      std::ostringstream os;
      os << "b(" << m + n << ") > b(" << m << ") + b(" << n << ")";
      throw NotSubadditiveError(os.str(), m, n);
    }
  };
  const long long total = (long long)(n_max - 1) * n_max / 2;
  if (total <= sample_pairs) {
    for (int m = 1; m < n_max; ++m)
      for (int n = 1; m + n <= n_max; ++n) verify(m, n);
  } else {
    Rng rng(seed);
    for (int t = 0; t < sample_pairs; ++t) {
      const int n = (int)rng.uniform_int(1, n_max - 1);
      const int m = (int)rng.uniform_int(1, n_max - n);
      verify(m, n);
    }
  }

  FeketeReport rep;
  rep.inf_ratio = kInf;
  for (int n = 1; n <= n_max; ++n)
    rep.inf_ratio = std::min(rep.inf_ratio, b[n - 1] / n);
  rep.final_ratio = b[n_max - 1] / n_max;
  return rep;
}

LimsupEstimate sigma(const HamRef& h, const ConormalTarget& target, int n_max,
                     const SequenceOptions& opts, double cluster_tol) {
  if (n_max < 10) throw std::invalid_argument("sigma: n_max >= 10");
  const ClassLabel label = canonical_label(target);
  std::vector<double> ratios(n_max);
  double worst_eb = 0.0;
  profile_stream(*h, n_max, opts.profile,
                 [&](int k, const ActionProfile& prof) {
                   if (!prof.graphical()) {
                     std::ostringstream os;
                     os << "iterate " << k << " is not graphical";
                     throw PartialSequenceError(os.str(), k);
                   }
                   ratios[k - 1] = ell_plus(prof, target, label).value / k;
                   const double e = prof.error_bound();
                   if (std::isnan(e) || std::isnan(worst_eb))
                     worst_eb = std::numeric_limits<double>::quiet_NaN();
                   else
                     worst_eb = std::max(worst_eb, e);
                 });
  LimsupEstimate est = estimate_limsup(ratios, cluster_tol);
  est.error_bound = worst_eb;
  return est;
}

SequencePair counterexample(int n_max, double theta_low, double theta_high) {
  if (n_max < 1) throw std::invalid_argument("counterexample: n_max >= 1");
  if (!(0.0 < theta_low && theta_low < theta_high && theta_high < 1.0))
    throw std::invalid_argument(
        "counterexample: need 0 < theta_low < theta_high < 1");

  SequencePair s;
  s.n_max = n_max;
  s.a.resize(n_max);
  s.b.resize(n_max);
  s.C = 1.0;
  s.a[0] = 1.0;
  bool incrementing = false;
  for (int n = 1; n < n_max; ++n) {
    // Equality with a threshold continues the current phase.
    const double ratio = s.a[n - 1] / n;
    if (!incrementing && ratio < theta_low)
      incrementing = true;
    else if (incrementing && ratio > theta_high)
      incrementing = false;
    s.a[n] = s.a[n - 1] + (incrementing ? 1.0 : 0.0);
  }
  for (int n = 1; n <= n_max; ++n) s.b[n - 1] = n;
  fill_ratios(s);
  s.property_report = check_properties(s);
  return s;
}

}  // namespace conlab
