#pragma once

// JSON run configurations for the command-line driver.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tdho/figures.hpp"
#include "tdho/model.hpp"

namespace tdho {

enum class OutputTarget { DensityX, DensityP, Entropy, Kernel, Figure };

std::string_view to_string(OutputTarget target);

struct OutputSpec {
  OutputTarget target;
  std::filesystem::path path;  // resolved against the config file's directory
};

struct SweepSpec {
  double t_start;
  double t_end;
  std::size_t n_steps;  // n_steps + 1 nodes
};

// Sweep nodes; a single node at t_start when n_steps = 0.
std::vector<double> sweep_times(const SweepSpec& sweep);

// Either a fixed grid, or a per-time automatic grid with at least min_points.
struct GridSpec {
  std::optional<SpatialGrid> fixed;
  std::size_t min_points = 0;
};

// Kernel sweeps evaluate K(x_end, t; x_start, kernel.t_start) at every sweep
// node t > t_start for each (x_start, x_end) pair.
struct KernelSpec {
  std::optional<double> t_start;
  std::vector<std::pair<double, double>> x_pairs{{0.0, 0.0}, {0.5, -0.5}};
};

struct RunConfig {
  Scenario scenario;
  int n = 0;
  std::optional<SweepSpec> sweep;
  GridSpec grid;
  std::vector<OutputSpec> outputs;
  std::optional<int> figure;
  FigureParams figure_params;
  KernelSpec kernel;
};

// ConfigError for malformed or inconsistent content, DomainError when the
// sweep leaves the scenario domain.
RunConfig parse_run_config(const nlohmann::json& j,
                           const std::filesystem::path& base_dir = {});
// IoError when the file cannot be read.
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace tdho
