#pragma once

// Plot-ready data sets for the seven figure types: density surfaces
// (figures 1, 5) and joint-entropy curves and surfaces (2-4, 6, 7).

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tdho/model.hpp"
#include "tdho/table.hpp"

namespace tdho {

using FigureParams = std::map<std::string, double, std::less<>>;

// Scenario kind each figure is drawn for: 1-4 pulsating mass, 5-7 inverse square.
ScenarioKind figure_scenario_kind(int figure_id);

// Parameter names accepted by a figure with their defaults. NaN marks a
// default derived from other parameters (figure 1's t_end).
FigureParams figure_defaults(int figure_id);

struct FigureData {
  std::string file_name;
  Table table;
};

// ConfigError for an unknown id or parameter, DomainError for ranges that
// leave the scenario domain.
FigureData figure_data(int figure_id, const FigureParams& params = {});

struct WrittenFile {
  std::filesystem::path path;
  std::size_t rows;
};

std::vector<WrittenFile> emit_figure_data(int figure_id, const FigureParams& params,
                                          const std::filesystem::path& out_dir);

}  // namespace tdho
