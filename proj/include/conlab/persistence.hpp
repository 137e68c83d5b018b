// persistence.hpp -- sublevel persistence of the action primitive over a
// conormal target; an independent minimax oracle for the spectral values.
#pragma once

#include <vector>

#include "conlab/geometry.hpp"
#include "conlab/profile.hpp"

namespace conlab {

struct PersistenceBar {
  double birth, death;  // birth <= death, zero-length bars dropped
};

struct PersistenceDiagram {
  std::vector<PersistenceBar> bars;
  double essential_zero_birth;  // global minimum of the filtered samples
  double essential_one_birth;   // level at which the sublevel set covers the domain
};

/// Union-find sweep over an explicit chain of sample values; cyclic chains
/// close the loop between the first and last entries.
PersistenceDiagram sublevel_persistence(const std::vector<double>& values, bool cyclic);

/// Filters S over the target: the whole base gives the full cyclic node
/// chain, an arc gives the clipped chain with interpolated boundary values.
/// Point targets carry no filtration.
PersistenceDiagram persistence(const ActionProfile& profile, const ConormalTarget& target);

}  // namespace conlab
