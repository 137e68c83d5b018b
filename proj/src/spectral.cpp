#include "conlab/spectral.hpp"

#include <cmath>

#include "conlab/errors.hpp"

namespace conlab {

namespace {

// Second-order action estimate at base x from the raw flow data of the
// nearest seed; independent of the Hermite fit.
double intersection_witness(const ActionProfile& pr, double x) {
  long j = pr.nearest_node(x);
  double d = x - pr.node_pos(j);
  double slope_p = (pr.node_fiber(j + 1) - pr.node_fiber(j - 1)) /
                   (pr.node_pos(j + 1) - pr.node_pos(j - 1));
  return pr.node_action(j) - pr.node_fiber(j) * d - 0.5 * slope_p * d * d;
}

}  // namespace

SpectralReport ell_plus(const ActionProfile& profile, const ConormalTarget& target,
                        ClassLabel class_label) {
  if (!profile.graphical())
    throw OracleUnavailableError("spectral oracle requires a graphical profile");
  double value, where;
  if (target.is_point()) {
    where = target.as_point().x.q;
    value = profile.s_hat(where);
  } else if (target.is_whole()) {
    Extremum e = class_label == ClassLabel::FundamentalN ? profile.global_max()
                                                         : profile.global_min();
    value = e.value;
    where = e.x;
  } else {
    const auto& arc = target.as_arc();
    double lo = arc.a.q, hi = lo + ccw_arc_length(arc.a.q, arc.b.q);
    if (arc.sign == ArcSign::Minus && class_label == ClassLabel::FundamentalN) {
      Extremum e = profile.max_on(lo, hi);
      value = e.value;
      where = e.x;
    } else if (arc.sign == ArcSign::Plus && class_label == ClassLabel::PointClass) {
      Extremum e = profile.min_on(lo, hi);
      value = e.value;
      where = e.x;
    } else {
      throw UnsupportedCombinationError("no class " + describe(class_label) +
                                        " on " + describe(target));
    }
  }
  double witness = intersection_witness(profile, where);
  return {value,   target, class_label, witness, std::fabs(value - witness),
          true,    "direct-extremum"};
}

ClassLabel canonical_label(const ConormalTarget& target) {
  if (target.is_arc() && target.as_arc().sign == ArcSign::Plus)
    return ClassLabel::PointClass;
  return ClassLabel::FundamentalN;
}

TriangleReport check_triangle(const HamRef& h, const HamRef& k,
                              const ConormalTarget& target, double tol,
                              const ProfileOptions& opts) {
  ActionProfile composite = action_profile(*compose(h, k), opts);
  ActionProfile first = action_profile(*h, opts);
  ActionProfile second = action_profile(*k, opts);
  ClassLabel label = canonical_label(target);
  TriangleReport rep;
  rep.composite = ell_plus(composite, target, label).value;
  rep.first_whole =
      ell_plus(first, ConormalTarget::whole(), ClassLabel::FundamentalN).value;
  rep.second_target = ell_plus(second, target, label).value;
  rep.margin = rep.first_whole + rep.second_target - rep.composite;
  rep.holds = rep.margin >= -tol;
  rep.error_bound = std::max(composite.error_bound(),
                             std::max(first.error_bound(), second.error_bound()));
  return rep;
}

ClassBoundReport check_class_bound(const HamRef& h, const ConormalTarget& target,
                                   double tol, const ProfileOptions& opts) {
  ActionProfile profile = action_profile(*h, opts);
  ClassBoundReport rep;
  rep.upper =
      ell_plus(profile, ConormalTarget::whole(), ClassLabel::FundamentalN).value;
  std::vector<ClassLabel> labels;
  if (target.is_arc())
    labels = {target.as_arc().sign == ArcSign::Minus ? ClassLabel::FundamentalN
                                                     : ClassLabel::PointClass};
  else
    labels = {ClassLabel::FundamentalN, ClassLabel::PointClass};
  rep.holds = true;
  for (ClassLabel label : labels) {
    double v = ell_plus(profile, target, label).value;
    rep.entries.push_back({label, v, rep.upper + tol - v});
    rep.holds = rep.holds && v <= rep.upper + tol;
  }
  return rep;
}

}  // namespace conlab
