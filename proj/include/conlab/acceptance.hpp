// acceptance.hpp -- the bundled verification suite behind the `report`
// command: eight numbered criteria, each with a pinned tolerance and a
// runtime budget, producing one pass/fail record apiece.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conlab {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;    // measured values, and any skipped clause by name
  double seconds = 0.0;  // wall time, compared against the budget
  double budget = 0.0;   // 0 = unbudgeted
  bool oracle_failure = false;  // failed because the oracle was unavailable
};

struct AcceptanceOptions {
  std::uint64_t seed = 2026;
  std::string out_dir = ".";      // CSV and SVG artifacts land here
  bool write_artifacts = true;
};

/// Runs all eight criteria in order.  Failures never throw; they come back
/// as pass = false with the measurement in detail.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// One line per criterion, "criterion N pass|FAIL name (t s): detail".
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace conlab
