// spectral.hpp -- spectral numbers of graphical time-1 maps against
// conormal targets, with intersection-point witnesses.
#pragma once

#include <string>
#include <vector>

#include "conlab/geometry.hpp"
#include "conlab/profile.hpp"

namespace conlab {

struct SpectralReport {
  double value;
  ConormalTarget target;
  ClassLabel class_label;
  double witness_action;    // nearest intersection-point action
  double witness_distance;  // |value - witness_action|
  bool graphical;
  std::string method;  // "direct-extremum"
};

/// Dispatch: Point(x) reads S(x) for either label; Whole pairs the
/// fundamental class with max S and the point class with min S; an arc with
/// sign - takes the arc max under the fundamental class and with sign + the
/// arc min under the point class.  Other arc combinations are unsupported.
SpectralReport ell_plus(const ActionProfile& profile, const ConormalTarget& target,
                        ClassLabel class_label);

struct TriangleReport {
  double composite;      // value of the composed map at the target
  double first_whole;    // whole-base fundamental value of the outer factor
  double second_target;  // value of the inner factor at the target
  double margin;         // first_whole + second_target - composite
  bool holds;
  double error_bound;    // worst profile error bound among the three maps
};

/// The class a target exposes by default: point class on a sign + arc,
/// the fundamental class everywhere else.
ClassLabel canonical_label(const ConormalTarget& target);

/// Composition bound: the composite value never exceeds the outer factor's
/// whole-base value plus the inner factor's value at the same target.
TriangleReport check_triangle(const HamRef& h, const HamRef& k,
                              const ConormalTarget& target, double tol,
                              const ProfileOptions& opts = {});

struct ClassBoundReport {
  struct Entry {
    ClassLabel label;
    double value;
    double margin;  // upper + tol - value
  };
  std::vector<Entry> entries;
  double upper;  // whole-base fundamental value
  bool holds;
};

/// Every supported class value on the target is bounded by the whole-base
/// fundamental value.
ClassBoundReport check_class_bound(const HamRef& h, const ConormalTarget& target,
                                   double tol, const ProfileOptions& opts = {});

}  // namespace conlab
