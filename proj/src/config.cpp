#include "tdho/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include <fmt/format.h>

#include "tdho/errors.hpp"
#include "tdho/hermite.hpp"

namespace tdho {

namespace {

using nlohmann::json;

void require_keys(const json& j, std::string_view where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(fmt::format("'{}' must be an object", where));
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw ConfigError(fmt::format("unknown key '{}' in '{}'", item.key(), where));
    }
  }
}

double number(const json& j, std::string_view name) {
  if (!j.is_number()) throw ConfigError(fmt::format("'{}' must be a number", name));
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(fmt::format("'{}' must be finite", name));
  return v;
}

std::size_t count(const json& j, std::string_view name) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ConfigError(fmt::format("'{}' must be a non-negative integer", name));
  }
  return j.get<std::size_t>();
}

OutputTarget target_from_string(const std::string& name) {
  if (name == "density_x") return OutputTarget::DensityX;
  if (name == "density_p") return OutputTarget::DensityP;
  if (name == "entropy") return OutputTarget::Entropy;
  if (name == "kernel") return OutputTarget::Kernel;
  if (name == "figure") return OutputTarget::Figure;
  throw ConfigError(fmt::format("unknown output target '{}'", name));
}

SweepSpec parse_sweep(const json& j) {
  require_keys(j, "sweep", {"t_start", "t_end", "n_steps"});
  if (!j.contains("t_start") || !j.contains("t_end") || !j.contains("n_steps")) {
    throw ConfigError("'sweep' needs t_start, t_end and n_steps");
  }
  SweepSpec sweep{number(j["t_start"], "sweep.t_start"), number(j["t_end"], "sweep.t_end"),
                  count(j["n_steps"], "sweep.n_steps")};
  if (sweep.n_steps == 0 && sweep.t_start != sweep.t_end) {
    throw ConfigError("sweep.n_steps = 0 requires t_start == t_end");
  }
  if (sweep.t_end < sweep.t_start) throw ConfigError("sweep.t_end must not precede t_start");
  return sweep;
}

GridSpec parse_grid(const json& j) {
  require_keys(j, "grid", {"x_min", "x_max", "n_points"});
  GridSpec grid;
  const bool has_bounds = j.contains("x_min") || j.contains("x_max");
  if (has_bounds) {
    if (!j.contains("x_min") || !j.contains("x_max") || !j.contains("n_points")) {
      throw ConfigError("a fixed grid needs x_min, x_max and n_points");
    }
    try {
      grid.fixed.emplace(number(j["x_min"], "grid.x_min"), number(j["x_max"], "grid.x_max"),
                         count(j["n_points"], "grid.n_points"));
    } catch (const DomainError& e) {
      throw ConfigError(fmt::format("invalid grid: {}", e.what()));
    }
  } else if (j.contains("n_points")) {
    grid.min_points = count(j["n_points"], "grid.n_points");
    if (!is_power_of_two(grid.min_points)) throw ConfigError("grid.n_points must be a power of two");
  }
  return grid;
}

KernelSpec parse_kernel(const json& j) {
  require_keys(j, "kernel", {"t_start", "x_pairs"});
  KernelSpec entry;
  if (j.contains("t_start")) entry.t_start = number(j["t_start"], "kernel.t_start");
  if (j.contains("x_pairs")) {
    if (!j["x_pairs"].is_array()) throw ConfigError("'kernel.x_pairs' must be an array");
    entry.x_pairs.clear();
    for (const auto& pair : j["x_pairs"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ConfigError("each kernel.x_pairs entry must be [x_start, x_end]");
      }
      entry.x_pairs.emplace_back(number(pair[0], "x_start"), number(pair[1], "x_end"));
    }
  }
  return entry;
}

// Scenario parameters feed the figure parameters they name; explicit
// figure_params entries take precedence.
FigureParams figure_params_for(int id, const Scenario& s, const json* overrides) {
  const FigureParams defaults = figure_defaults(id);
  FigureParams params;
  const std::pair<const char*, double> inherited[] = {
      {"m0", s.m0()}, {"omega0", s.omega0()}, {"nu", s.nu()}, {"hbar", s.hbar()}};
  for (const auto& [key, value] : inherited) {
    if (defaults.count(key)) params[key] = value;
  }
  if (overrides) {
    if (!overrides->is_object()) throw ConfigError("'figure_params' must be an object");
    for (const auto& item : overrides->items()) {
      if (!defaults.count(item.key())) {
        throw ConfigError(fmt::format("figure {} has no parameter '{}'", id, item.key()));
      }
      params[item.key()] = number(item.value(), item.key());
    }
  }
  return params;
}

}  // namespace

std::string_view to_string(OutputTarget target) {
  switch (target) {
    case OutputTarget::DensityX: return "density_x";
    case OutputTarget::DensityP: return "density_p";
    case OutputTarget::Entropy: return "entropy";
    case OutputTarget::Kernel: return "kernel";
    case OutputTarget::Figure: return "figure";
  }
  return "unknown";
}

std::vector<double> sweep_times(const SweepSpec& sweep) {
  if (sweep.n_steps == 0) return {sweep.t_start};
  const TimeGrid grid(sweep.t_start, sweep.t_end, sweep.n_steps);
  std::vector<double> times(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) times[i] = grid.time(i);
  return times;
}

RunConfig parse_run_config(const json& j, const std::filesystem::path& base_dir) {
  try {
    require_keys(j, "config",
                 {"scenario", "n", "sweep", "grid", "outputs", "figure", "figure_params", "kernel"});
    if (!j.contains("scenario")) throw ConfigError("missing 'scenario'");
    RunConfig cfg{scenario_from_json(j["scenario"]), 0, {}, {}, {}, {}, {}, {}};

    if (j.contains("n")) {
      const std::size_t n = count(j["n"], "n");
      if (n > static_cast<std::size_t>(kMaxQuantumNumber)) {
        throw ConfigError(fmt::format("'n' must not exceed {}", kMaxQuantumNumber));
      }
      cfg.n = static_cast<int>(n);
    }
    if (j.contains("sweep")) cfg.sweep = parse_sweep(j["sweep"]);
    if (j.contains("grid")) cfg.grid = parse_grid(j["grid"]);
    if (j.contains("kernel")) cfg.kernel = parse_kernel(j["kernel"]);

    if (j.contains("figure")) {
      if (!j["figure"].is_number_integer()) throw ConfigError("'figure' must be an integer");
      const int id = j["figure"].get<int>();
      if (id < 1 || id > 7) throw ConfigError(fmt::format("figure id must be 1-7, got {}", id));
      if (figure_scenario_kind(id) != cfg.scenario.kind()) {
        throw ConfigError(fmt::format("figure {} requires a {} scenario, got {}", id,
                                      to_string(figure_scenario_kind(id)),
                                      to_string(cfg.scenario.kind())));
      }
      cfg.figure = id;
      cfg.figure_params =
          figure_params_for(id, cfg.scenario, j.contains("figure_params") ? &j["figure_params"] : nullptr);
    } else if (j.contains("figure_params")) {
      throw ConfigError("'figure_params' given without 'figure'");
    }

    if (!j.contains("outputs") || !j["outputs"].is_array()) {
      throw ConfigError("'outputs' must be an array");
    }
    std::set<std::filesystem::path> seen;
    for (const auto& o : j["outputs"]) {
      require_keys(o, "outputs[]", {"target", "path"});
      if (!o.contains("target") || !o["target"].is_string() || !o.contains("path") ||
          !o["path"].is_string()) {
        throw ConfigError("each output needs string 'target' and 'path'");
      }
      OutputSpec entry{target_from_string(o["target"].get<std::string>()),
                      base_dir / o["path"].get<std::string>()};
      if (entry.path.filename().empty()) throw ConfigError("output path must name a file");
      if (!seen.insert(entry.path.lexically_normal()).second) {
        throw ConfigError(fmt::format("output path '{}' is used twice", entry.path.string()));
      }
      if (entry.target == OutputTarget::Figure && !cfg.figure) {
        throw ConfigError("a 'figure' output needs a 'figure' id");
      }
      if (entry.target != OutputTarget::Figure && !cfg.sweep) {
        throw ConfigError(fmt::format("output '{}' needs a 'sweep'", to_string(entry.target)));
      }
      cfg.outputs.push_back(std::move(entry));
    }
    if (cfg.figure) {
      bool has_figure_output = false;
      for (const auto& o : cfg.outputs) has_figure_output |= o.target == OutputTarget::Figure;
      if (!has_figure_output) {
        cfg.outputs.push_back({OutputTarget::Figure, base_dir / fmt::format("fig{}.csv", *cfg.figure)});
      }
    }
    if (cfg.outputs.empty()) throw ConfigError("no outputs requested");

    if (cfg.sweep) {
      for (double t : sweep_times(*cfg.sweep)) cfg.scenario.require_domain(t);
    }
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("malformed config: {}", e.what()));
  }
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read config '{}'", path.string()));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("config '{}' is not valid JSON: {}", path.string(), e.what()));
  }
  return parse_run_config(j, path.parent_path());
}

}  // namespace tdho
