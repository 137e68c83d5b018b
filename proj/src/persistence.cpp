#include "conlab/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "conlab/errors.hpp"

namespace conlab {

PersistenceDiagram sublevel_persistence(const std::vector<double>& values, bool cyclic) {
  const int n = (int)values.size();
  if (n == 0) throw std::invalid_argument("persistence: empty chain");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return values[a] != values[b] ? values[a] < values[b] : a < b;
  });
  std::vector<int> parent(n, -1);
  std::vector<double> birth(n);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  PersistenceDiagram out;
  for (int idx : order) {
    parent[idx] = idx;
    birth[idx] = values[idx];
    int nbs[2] = {idx - 1, idx + 1};
    if (cyclic) {
      nbs[0] = (idx + n - 1) % n;
      nbs[1] = (idx + 1) % n;
    }
    for (int t = 0; t < 2; ++t) {
      int nb = nbs[t];
      if (nb < 0 || nb >= n || nb == idx) continue;
      if (t == 1 && nb == nbs[0]) continue;  // two-vertex cycle, one edge
      if (parent[nb] < 0) continue;
      int ra = find(idx), rb = find(nb);
      if (ra == rb) continue;  // closes a loop, no merge
      // elder rule: the component with the smaller birth survives
      int younger;
      if (birth[ra] != birth[rb])
        younger = birth[ra] > birth[rb] ? ra : rb;
      else
        younger = std::max(ra, rb);
      int elder = younger == ra ? rb : ra;
      if (values[idx] > birth[younger])
        out.bars.push_back({birth[younger], values[idx]});
      parent[younger] = elder;
    }
  }
  out.essential_zero_birth = *std::min_element(values.begin(), values.end());
  out.essential_one_birth = *std::max_element(values.begin(), values.end());
  std::sort(out.bars.begin(), out.bars.end(),
            [](const PersistenceBar& a, const PersistenceBar& b) {
              return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
            });
  return out;
}

PersistenceDiagram persistence(const ActionProfile& profile, const ConormalTarget& target) {
  if (!profile.graphical())
    throw OracleUnavailableError("persistence requires a graphical profile");
  if (target.is_point())
    throw UnsupportedCombinationError("persistence needs a whole or arc target");
  if (target.is_whole()) {
    std::vector<double> values(profile.actions().data(),
                               profile.actions().data() + profile.grid_size());
    return sublevel_persistence(values, true);
  }
  const auto& arc = target.as_arc();
  double lo = arc.a.q, hi = lo + ccw_arc_length(arc.a.q, arc.b.q);
  std::vector<double> values;
  values.push_back(profile.s_hat(lo));
  long j = profile.nearest_node(lo) - 2;
  while (profile.node_pos(j) <= lo) ++j;
  for (; profile.node_pos(j) < hi; ++j) values.push_back(profile.node_action(j));
  values.push_back(profile.s_hat(hi));
  return sublevel_persistence(values, false);
}

}  // namespace conlab
