// homogenize.hpp -- crossed subadditive sequences and homogenized invariants.
//
// For a loop of Hamiltonian diffeomorphisms phi generated by H, the pair
//   a_n = n*ell_M(phi^-1) + ell_N(phi^n)
//   b_n = n*ell_M(phi^-1) + ell_M(phi^n)
// is nonnegative and crossed-subadditive (a_{m+n} <= a_n + b_m), a_n is
// non-decreasing with increments bounded by a constant C, and a_n <= b_n.
// Those properties alone do NOT force a_n/n to converge; the integer
// counterexample below realizes a divergent a_n/n inside the axiom class.
// The homogenized invariant sigma^N is therefore a limsup, estimated here
// by a tail supremum together with accumulation-point clustering so that
// divergence is reported rather than hidden.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conlab/geometry.hpp"
#include "conlab/hamiltonian.hpp"
#include "conlab/profile.hpp"

namespace conlab {

/// One named property check: pass/fail with the worst margin seen, a
/// human-readable witness for the minimizing index or pair, and the first
/// index where the check failed (empty when it passed everywhere).
struct PropertyCheck {
  std::string name;
  bool pass = false;
  double margin = 0.0;
  std::string witness;
  std::string first_violation;
};

/// Verdicts for the five sequence properties.  Failures are report content,
/// not exceptions: a violating pair is a legitimate object of study.
struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_pass = false;
  double tol = 0.0;

  const PropertyCheck* find(const std::string& name) const;
};

/// The sequence pair (a_n, b_n), 1-indexed: a[k] holds a_{k+1}.
struct SequencePair {
  int n_max = 0;
  std::vector<double> a;
  std::vector<double> b;
  double C = 0.0;  // increment bound, >= 0
  std::vector<double> a_ratio;  // a_n / n
  std::vector<double> b_ratio;  // b_n / n
  // Raw oracle values behind a and b; empty for synthetic integer pairs.
  std::vector<double> ell_n;
  std::vector<double> ell_m;
  double ell_inv = 0.0;
  double error_bound = 0.0;  // worst oracle error bound over the stream
  std::optional<PropertyReport> property_report;
};

/// Limsup estimate for a ratio sequence.  `value` is the supremum over the
/// final `tail_window` entries.  `accumulation_points` are single-linkage
/// clusters of the tail's local extrema (center, member count), sorted by
/// center, largest first; a single cluster means the ratios settled.
struct LimsupEstimate {
  double value = 0.0;
  int tail_window = 0;
  std::vector<std::pair<double, int>> accumulation_points;
  bool converged = false;
  double error_bound = 0.0;  // worst oracle error bound over the stream
};

/// Fekete limit report for a subadditive sequence: the infimum of b_n/n over
/// the available prefix together with the last ratio.
struct FeketeReport {
  double inf_ratio = 0.0;
  double final_ratio = 0.0;
};

/// Profile options used for sequence campaigns.  Coarser than the one-shot
/// profile defaults: a campaign flows n_max periods, and the lifted
/// generators used in practice are resolved exactly at any grid.
struct SequenceOptions {
  ProfileOptions profile;

  SequenceOptions() {
    profile.grid = 256;
    profile.step = 1.0 / 32.0;
    profile.probe_count = 32;
    profile.richardson_seeds = 8;
  }
};

/// Which ratio sequence of a pair to feed the limsup estimator.
enum class RatioSeq { A, B };

/// Builds the oracle pair for H against conormal target N in one streaming
/// pass over the iterates.  ell_M(phi^-1) comes from one profile of the
/// inverse; C is |ell_M(phi^-1)| plus the largest observed single-step
/// increment of ell_N (clamped to be >= 0).  A non-graphical iterate raises
/// PartialSequenceError naming the failing period.
SequencePair build_sequences(const HamRef& h, const ConormalTarget& target,
                             int n_max, const SequenceOptions& opts = {});

/// Checks the five sequence properties:
///   crossed-subadditive   a_{m+n} <= a_n + b_m   (random pairs)
///   nonnegative           a_n, b_n >= 0          (exhaustive)
///   a-dominated-by-b      a_n <= b_n             (exhaustive)
///   nondecreasing         a_{n+1} >= a_n         (exhaustive)
///   increments-bounded    a_{n+1} - a_n <= C     (exhaustive)
/// A check passes when its worst margin is >= -tol.  When the pair budget
/// covers every (m, n) the crossed check is exhaustive as well.
PropertyReport check_properties(const SequencePair& s, int sample_pairs = 2000,
                                double tol = 1e-6, std::uint64_t seed = 17);

/// Limsup estimate of a[n]/n or b[n]/n.  Requires n_max >= 10.  The value is
/// the supremum over the final ceil(n_max/10) ratios; accumulation points come
/// from local extrema of the tail (n >= ceil(n_max/16)) clustered at
/// `cluster_tol` (default tuned to separate 1/3 from 1/2).
LimsupEstimate limsup_ratio(const SequencePair& s, RatioSeq which,
                            double cluster_tol = 1.0 / 24.0);

/// Fekete limit of a subadditive sequence b (1-indexed: b[0] = b_1).
/// Subadditivity b_{m+n} <= b_m + b_n is verified on sampled pairs first;
/// a violation raises NotSubadditiveError with the witnessing (m, n).
FeketeReport fekete_limit(const std::vector<double>& b, int sample_pairs = 2000,
                          std::uint64_t seed = 17);

/// sigma^N(H): limsup estimate of ell_N(phi^n)/n streamed over n <= n_max.
/// Requires n_max >= 10.
LimsupEstimate sigma(const HamRef& h, const ConormalTarget& target, int n_max,
                     const SequenceOptions& opts = {},
                     double cluster_tol = 1.0 / 24.0);

/// zeta^N on autonomous generators is sigma^N of the time-1 map.
inline LimsupEstimate zeta(const HamRef& h, const ConormalTarget& target,
                           int n_max, const SequenceOptions& opts = {},
                           double cluster_tol = 1.0 / 24.0) {
  return sigma(h, target, n_max, opts, cluster_tol);
}

/// Integer pair with divergent a_n/n inside the axiom class: a_1 = 1, then
/// hold a_{n+1} = a_n while a_n/n >= theta_low, increment a_{n+1} = a_n + 1
/// while a_n/n <= theta_high; equality continues the current phase.  b_n = n
/// and C = 1.  The ratio sequence oscillates between the thresholds forever,
/// so limsup >= theta_high while liminf <= theta_low.  The property report is
/// attached (all five hold).
SequencePair counterexample(int n_max, double theta_low = 1.0 / 3.0,
                            double theta_high = 1.0 / 2.0);

}  // namespace conlab
