#pragma once

// Executes a run configuration: density, entropy and kernel sweeps plus
// figure data, written as CSV files.

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "tdho/config.hpp"
#include "tdho/figures.hpp"

namespace tdho {

struct RunReport {
  std::vector<WrittenFile> files;
  std::size_t rows_written = 0;
  std::size_t bound_violations = 0;
  // Most negative bound margin seen below -kBoundTolerance; 0 when none.
  double max_bound_violation = 0.0;
  // max |s_closed - s_joint| over pulsating ground-state entropy rows.
  std::optional<double> reference_entropy_gap;
  std::size_t kernel_rows_refused = 0;

  nlohmann::json to_json() const;
};

RunReport run(const RunConfig& config);

}  // namespace tdho
