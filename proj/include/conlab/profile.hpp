// profile.hpp -- action profiles of the flowed zero section.
//
// Flowing every seed (q0, 0) for one protocol period yields endpoint bases b,
// fiber values p1, and accumulated actions a.  When the endpoint bases are
// strictly monotone of winding 1 the image is a graph over the base, the
// actions descend to a primitive S with dS/db = -p1, and the profile stores S
// as a cubic Hermite table.  Non-graphical images are certified as such and
// every evaluation refuses.
#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "conlab/flow.hpp"
#include "conlab/hamiltonian.hpp"

namespace conlab {

struct ProfileOptions {
  int grid = 4096;            // seeds on the zero section
  double step = 1e-3;         // integrator step per protocol unit
  int probe_count = 64;       // staggered seeds probing the interpolation error
  int richardson_seeds = 16;  // half-step reflow subsample
  bool with_error = true;
  double blowup_factor = 10.0;
  double monotone_margin = 1e-9;
  double refine_tol = 1e-10;  // extremum refinement in the angle variable
};

struct Extremum {
  double x;  // lifted angle
  double value;
};

class ActionProfile {
 public:
  ActionProfile(Eigen::ArrayXd seeds, Eigen::ArrayXd bases, Eigen::ArrayXd fibers,
                Eigen::ArrayXd actions, double monotone_margin, double refine_tol);

  int grid_size() const { return grid_; }
  const Eigen::ArrayXd& seeds() const { return seeds_; }
  /// Lifted endpoint bases, ascending in seed order when graphical.
  const Eigen::ArrayXd& bases() const { return bases_; }
  const Eigen::ArrayXd& fibers() const { return fibers_; }
  const Eigen::ArrayXd& actions() const { return actions_; }
  bool graphical() const { return graphical_; }
  /// Flow error + staggered-probe error + grid resolution; NaN when skipped.
  double error_bound() const { return error_bound_; }

  /// The primitive, 1-periodic in x.  Throws OracleUnavailableError unless
  /// graphical; so do all evaluations below.
  double s_hat(double x) const;
  double s_hat_slope(double x) const;  // dS/db = -p1

  /// Extremum over the closed lifted arc [lo, hi], hi - lo in [0, 1].
  Extremum max_on(double lo, double hi) const;
  Extremum min_on(double lo, double hi) const;
  Extremum global_max() const;
  Extremum global_min() const;
  /// Refined interior extrema of S, deduplicated; a single entry for
  /// constant profiles.
  std::vector<Extremum> critical_points() const;

  /// Node table access with index wraparound: node j + grid sits one period up.
  double node_pos(long j) const;
  double node_action(long j) const;
  double node_fiber(long j) const;
  long nearest_node(double x) const;

 private:
  friend void profile_stream(const Hamiltonian& h, int periods,
                             const ProfileOptions& opts,
                             const std::function<void(int, const ActionProfile&)>& fn);
  void set_error_bound(double e) { error_bound_ = e; }
  void require_graphical() const;
  long first_node_after(double x) const;
  Extremum extremize(double lo, double hi, double sign) const;

  int grid_ = 0;
  Eigen::ArrayXd seeds_, bases_, fibers_, actions_;
  bool graphical_ = false;
  double error_bound_;
  double refine_tol_;
};

ActionProfile action_profile(const Hamiltonian& h, const ProfileOptions& opts = {});

/// Streams `periods` repetitions of the unit protocol in one pass and hands
/// back the profile of the k-fold map after each period, k = 1..periods.
void profile_stream(const Hamiltonian& h, int periods, const ProfileOptions& opts,
                    const std::function<void(int, const ActionProfile&)>& fn);

}  // namespace conlab
