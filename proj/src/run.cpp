#include "tdho/run.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "tdho/entropy.hpp"
#include "tdho/errors.hpp"
#include "tdho/parallel.hpp"
#include "tdho/propagator.hpp"
#include "tdho/wavefunction.hpp"

namespace tdho {

namespace {

std::vector<std::string> run_metadata(const RunConfig& cfg, std::string_view what) {
  std::vector<std::string> lines{
      fmt::format("{} for state n = {}", what, cfg.n),
      fmt::format("scenario: {}", scenario_to_json(cfg.scenario).dump())};
  if (cfg.grid.fixed) {
    lines.push_back(fmt::format("grid: x_min={:.17g} x_max={:.17g} n_points={}",
                                cfg.grid.fixed->x_min(), cfg.grid.fixed->x_max(),
                                cfg.grid.fixed->size()));
  } else {
    lines.push_back(fmt::format("grid: automatic per time, n_points >= {}",
                                std::max<std::size_t>(cfg.grid.min_points, 4096)));
  }
  return lines;
}

SpatialGrid grid_at(const RunConfig& cfg, double t) {
  if (cfg.grid.fixed) return *cfg.grid.fixed;
  SpatialGrid g = default_grid(cfg.scenario, cfg.n, t);
  if (g.size() >= cfg.grid.min_points) return g;
  return SpatialGrid(g.x_min(), g.x_max(), cfg.grid.min_points);
}

Table density_tables(const RunConfig& cfg, const std::vector<double>& times, bool momentum) {
  std::vector<DensityPair> pairs(times.size());
  parallel_for(times.size(), [&](std::size_t i) {
    pairs[i] = density_pair(cfg.n, cfg.scenario, times[i], grid_at(cfg, times[i]));
  });
  Table table;
  table.metadata = run_metadata(cfg, momentum ? "momentum density" : "position density");
  table.header = {"t", momentum ? "p" : "x", momentum ? "density_p" : "density_x"};
  for (const auto& pair : pairs) {
    const auto& axis = momentum ? pair.p : pair.x;
    const auto& values = momentum ? pair.density_p : pair.density_x;
    for (std::size_t k = 0; k < axis.size(); ++k) table.rows.push_back({pair.t, axis[k], values[k]});
  }
  return table;
}

Table entropy_table(const RunConfig& cfg, const std::vector<double>& times, RunReport& report) {
  std::vector<EntropyRecord> records(times.size());
  parallel_for(times.size(), [&](std::size_t i) {
    records[i] = joint_entropy_numeric(cfg.n, cfg.scenario, times[i], grid_at(cfg, times[i]));
  });
  Table table;
  table.metadata = run_metadata(cfg, "joint entropy");
  table.header = {"t", "s_x", "s_p", "s_joint", "s_closed", "bound_margin", "method"};
  const bool reference = cfg.scenario.kind() == ScenarioKind::PulsatingMass && cfg.n == 0;
  for (const auto& r : records) {
    table.rows.push_back({r.t, r.s_x, r.s_p, r.s_joint, r.s_closed, r.bound_margin});
    table.text.push_back({std::string(to_string(r.method))});
    if (r.bound_margin < -kBoundTolerance) {
      ++report.bound_violations;
      report.max_bound_violation = std::min(report.max_bound_violation, r.bound_margin);
    }
    if (reference && r.s_closed) {
      const double gap = std::abs(*r.s_closed - r.s_joint);
      report.reference_entropy_gap = std::max(report.reference_entropy_gap.value_or(0.0), gap);
    }
  }
  if (reference) {
    table.metadata.push_back(
        "s_closed holds the quoted pulsating reference form, which is not a ground truth");
  }
  return table;
}

Table kernel_table(const RunConfig& cfg, const std::vector<double>& times, RunReport& report) {
  const double t0 = cfg.kernel.t_start.value_or(times.front());
  std::vector<double> ends;
  for (double t : times) {
    if (t > t0) ends.push_back(t);
  }
  const std::size_t n_pairs = cfg.kernel.x_pairs.size();
  std::vector<std::optional<KernelValue>> values(ends.size() * n_pairs);
  parallel_for(ends.size(), [&](std::size_t i) {
    if (!cfg.scenario.interval_in_domain(t0, ends[i])) return;
    const RhoSolution rho = analytic_solution(cfg.scenario, TimeGrid(t0, ends[i], 1));
    for (std::size_t k = 0; k < n_pairs; ++k) {
      const auto [xs, xe] = cfg.kernel.x_pairs[k];
      try {
        values[i * n_pairs + k] = kernel(cfg.scenario, rho, {xs, xe, t0, ends[i]});
      } catch (const CausticError&) {
      }
    }
  });
  Table table;
  table.metadata = {
      "propagator K(x_end, t_end; x_start, t_start)",
      fmt::format("scenario: {}", scenario_to_json(cfg.scenario).dump()),
      "refused rows (caustic or mass zero between the times) have empty kernel fields"};
  table.header = {"x_start", "x_end", "t_start", "t_end", "re_K", "im_K", "near_caustic"};
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t k = 0; k < n_pairs; ++k) {
      const auto [xs, xe] = cfg.kernel.x_pairs[k];
      const auto& v = values[i * n_pairs + k];
      if (v) {
        table.rows.push_back({xs, xe, t0, ends[i], v->value.real(), v->value.imag(),
                              v->near_caustic ? 1.0 : 0.0});
      } else {
        ++report.kernel_rows_refused;
        table.rows.push_back({xs, xe, t0, ends[i], std::nullopt, std::nullopt, std::nullopt});
      }
    }
  }
  return table;
}

}  // namespace

nlohmann::json RunReport::to_json() const {
  nlohmann::json files_json = nlohmann::json::array();
  for (const auto& f : files) files_json.push_back({{"path", f.path.string()}, {"rows", f.rows}});
  nlohmann::json j{{"files", files_json},
                   {"rows_written", rows_written},
                   {"bound_violations", bound_violations},
                   {"max_bound_violation", max_bound_violation},
                   {"kernel_rows_refused", kernel_rows_refused}};
  j["reference_entropy_gap"] =
      reference_entropy_gap ? nlohmann::json(*reference_entropy_gap) : nlohmann::json(nullptr);
  return j;
}

RunReport run(const RunConfig& cfg) {
  RunReport report;
  const std::vector<double> times = cfg.sweep ? sweep_times(*cfg.sweep) : std::vector<double>{};
  for (const auto& out : cfg.outputs) {
    Table table;
    switch (out.target) {
      case OutputTarget::DensityX: table = density_tables(cfg, times, false); break;
      case OutputTarget::DensityP: table = density_tables(cfg, times, true); break;
      case OutputTarget::Entropy: table = entropy_table(cfg, times, report); break;
      case OutputTarget::Kernel: table = kernel_table(cfg, times, report); break;
      case OutputTarget::Figure: table = figure_data(*cfg.figure, cfg.figure_params).table; break;
    }
    write_table(out.path, table);
    report.files.push_back({out.path, table.rows.size()});
    report.rows_written += table.rows.size();
  }
  return report;
}

}  // namespace tdho
