// svg.hpp -- static vector plots: ratio sequences, action profiles, and
// persistence bars.  Output is deterministic byte for byte.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace conlab {

struct Series {
  std::string name;
  std::vector<double> x, y;
};

/// Polyline chart with framed axes and tick labels; one color per series.
void write_line_chart(const std::string& path, const std::string& title,
                      const std::vector<Series>& series);

/// Horizontal interval chart, one row per bar, drawn bottom up.
void write_bar_chart(const std::string& path, const std::string& title,
                     const std::vector<std::pair<double, double>>& bars);

}  // namespace conlab
