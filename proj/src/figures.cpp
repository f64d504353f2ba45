#include "tdho/figures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include <fmt/format.h>

#include "tdho/entropy.hpp"
#include "tdho/errors.hpp"
#include "tdho/parallel.hpp"
#include "tdho/wavefunction.hpp"

namespace tdho {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_id(int id) {
  if (id < 1 || id > 7) throw ConfigError(fmt::format("figure id must be 1-7, got {}", id));
}

FigureParams merged(int id, const FigureParams& params) {
  FigureParams out = figure_defaults(id);
  for (const auto& [key, value] : params) {
    auto it = out.find(key);
    if (it == out.end()) {
      throw ConfigError(fmt::format("figure {} has no parameter '{}'", id, key));
    }
    it->second = value;
  }
  return out;
}

std::size_t count_param(const FigureParams& p, const char* key, std::size_t minimum) {
  const double v = p.at(key);
  if (!(v >= static_cast<double>(minimum)) || v != std::floor(v) || v > 1e7) {
    throw ConfigError(fmt::format("parameter '{}' must be an integer >= {}", key, minimum));
  }
  return static_cast<std::size_t>(v);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = (i + 1 == n) ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

std::string metadata_line(const FigureParams& p) {
  std::string line = "parameters:";
  for (const auto& [k, v] : p) line += fmt::format(" {}={:.17g}", k, v);
  return line;
}

Scenario pulsating_from(const FigureParams& p, double nu) {
  try {
    return Scenario::pulsating_mass(p.at("m0"), p.at("omega0"), nu, p.at("hbar"));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

Scenario inverse_square_from(const FigureParams& p, double omega0) {
  try {
    return Scenario::inverse_square_frequency(p.at("m0"), omega0, p.at("hbar"));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::optional<double> margin(double s_joint) { return s_joint - kJointEntropyBound; }

// Ground-state density surface on an x grid wide enough for every slice.
Table density_surface(const Scenario& s, const std::vector<double>& times, std::size_t n_x) {
  if (!is_power_of_two(n_x) || n_x < 16) {
    throw ConfigError("n_x must be a power of two >= 16");
  }
  double widest = 0.0;
  for (double t : times) {
    s.require_domain(t);
    widest = std::max(widest, ground_state_variances(s, t).position);
  }
  const SpatialGrid grid = SpatialGrid::symmetric(10.0 * std::sqrt(widest), n_x);
  Table table;
  table.header = {"t", "x", "density"};
  table.rows.resize(times.size() * n_x);
  parallel_for(times.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < n_x; ++j) {
      const double x = grid.x(j);
      table.rows[i * n_x + j] = {times[i], x, std::norm(psi(0, s, times[i], x))};
    }
  });
  return table;
}

double entropy_point(const Scenario& s, double t) {
  return joint_entropy_numeric(0, s, t, default_grid(s, 0, t)).s_joint;
}

}  // namespace

ScenarioKind figure_scenario_kind(int figure_id) {
  require_id(figure_id);
  return figure_id <= 4 ? ScenarioKind::PulsatingMass : ScenarioKind::InverseSquareFrequency;
}

FigureParams figure_defaults(int figure_id) {
  require_id(figure_id);
  FigureParams p{{"m0", 1.0}, {"hbar", 1.0}};
  switch (figure_id) {
    case 1:
      p.insert({{"omega0", 1.0}, {"nu", 1.0}, {"t_start", 0.0}, {"t_end", kNaN},
                {"n_t", 64}, {"n_x", 4096}});
      break;
    case 2:
      p.insert({{"omega0", 1.0}, {"t_start", 0.0}, {"t_end", 5.0}, {"n_t", 51},
                {"nu_min", 0.1}, {"nu_max", 3.0}, {"n_nu", 30}});
      break;
    case 3:
      p.insert({{"omega0", 1.0}, {"t", 1.0}, {"nu_min", 0.1}, {"nu_max", 1.0}, {"n_nu", 91}});
      break;
    case 4:
      p.insert({{"omega0", 1.0}, {"t", 1.0}, {"nu_min", 1.0}, {"nu_max", 3.0}, {"n_nu", 101}});
      break;
    case 5:
      p.insert({{"omega0", 1.0}, {"t_start", 0.2}, {"t_end", 5.0}, {"n_t", 49}, {"n_x", 4096}});
      break;
    case 6:
      p.insert({{"t_start", 0.2}, {"t_end", 5.0}, {"n_t", 25}, {"omega0_min", 0.5},
                {"omega0_max", 3.0}, {"n_omega0", 26}});
      break;
    case 7:
      p.insert({{"t_start", 0.2}, {"t_end", 5.0}, {"n_t", 49}, {"omega0_min", 0.5},
                {"omega0_max", 3.0}, {"n_omega0", 26}});
      break;
  }
  return p;
}

FigureData figure_data(int figure_id, const FigureParams& params) {
  FigureParams p = merged(figure_id, params);
  FigureData out;
  out.file_name = fmt::format("fig{}.csv", figure_id);
  Table& table = out.table;

  switch (figure_id) {
    case 1: {
      const Scenario s = pulsating_from(p, p.at("nu"));
      // Default window: the first 90% of the half period before the mass zero.
      if (std::isnan(p.at("t_end"))) {
        p["t_end"] = s.nu() > 0.0 ? 0.45 * std::numbers::pi / s.nu() : 5.0;
      }
      if (!s.interval_in_domain(p.at("t_start"), p.at("t_end"))) {
        throw DomainError("figure 1 time window crosses a zero of the pulsating mass");
      }
      const auto times = linspace(p.at("t_start"), p.at("t_end"), count_param(p, "n_t", 2));
      table = density_surface(s, times, count_param(p, "n_x", 16));
      table.metadata = {"figure 1: ground-state position density, pulsating mass",
                        metadata_line(p)};
      break;
    }
    case 2: {
      const auto times = linspace(p.at("t_start"), p.at("t_end"), count_param(p, "n_t", 2));
      const auto nus = linspace(p.at("nu_min"), p.at("nu_max"), count_param(p, "n_nu", 2));
      std::vector<std::optional<std::vector<std::optional<double>>>> rows(times.size() * nus.size());
      parallel_for(rows.size(), [&](std::size_t k) {
        const double t = times[k / nus.size()];
        const double nu = nus[k % nus.size()];
        const Scenario s = pulsating_from(p, nu);
        if (!s.in_domain(t)) return;
        const double sj = entropy_point(s, t);
        rows[k] = std::vector<std::optional<double>>{t, nu, sj, margin(sj)};
      });
      std::size_t skipped = 0;
      for (auto& r : rows) {
        if (r) table.rows.push_back(std::move(*r));
        else ++skipped;
      }
      table.metadata = {"figure 2: ground-state joint entropy over time and pulsation frequency",
                        metadata_line(p),
                        fmt::format("points skipped inside mass-zero guards: {}", skipped)};
      table.header = {"t", "nu", "s_joint", "bound_margin"};
      break;
    }
    case 3:
    case 4: {
      const double t = p.at("t");
      const auto nus = linspace(p.at("nu_min"), p.at("nu_max"), count_param(p, "n_nu", 2));
      std::vector<std::optional<std::vector<std::optional<double>>>> rows(nus.size());
      parallel_for(nus.size(), [&](std::size_t k) {
        const Scenario s = pulsating_from(p, nus[k]);
        if (!s.in_domain(t)) return;
        const double sj = entropy_point(s, t);
        rows[k] = std::vector<std::optional<double>>{nus[k], sj, margin(sj)};
      });
      std::size_t skipped = 0;
      for (auto& r : rows) {
        if (r) table.rows.push_back(std::move(*r));
        else ++skipped;
      }
      table.metadata = {fmt::format("figure {}: ground-state joint entropy versus {} nu at fixed t",
                                    figure_id, figure_id == 3 ? "small" : "large"),
                        metadata_line(p),
                        fmt::format("points skipped inside mass-zero guards: {}", skipped)};
      table.header = {"nu", "s_joint", "bound_margin"};
      break;
    }
    case 5: {
      const Scenario s = inverse_square_from(p, p.at("omega0"));
      const auto times = linspace(p.at("t_start"), p.at("t_end"), count_param(p, "n_t", 2));
      table = density_surface(s, times, count_param(p, "n_x", 16));
      table.metadata = {"figure 5: ground-state position density, inverse-square frequency",
                        metadata_line(p)};
      break;
    }
    case 6:
    case 7: {
      const auto times = linspace(p.at("t_start"), p.at("t_end"), count_param(p, "n_t", 2));
      const auto omegas =
          linspace(p.at("omega0_min"), p.at("omega0_max"), count_param(p, "n_omega0", 2));
      for (double w : omegas) inverse_square_from(p, w).require_domain(times.front());
      table.rows.resize(times.size() * omegas.size());
      parallel_for(table.rows.size(), [&](std::size_t k) {
        const double t = times[k / omegas.size()];
        const double w = omegas[k % omegas.size()];
        const double sj = entropy_point(inverse_square_from(p, w), t);
        if (figure_id == 6) {
          table.rows[k] = {t, w, sj, margin(sj)};
        } else {
          table.rows[k] = {t, w, sj, joint_entropy_closed_inverse_square(w, t), margin(sj)};
        }
      });
      table.metadata = {fmt::format("figure {}: ground-state joint entropy over time and omega0{}",
                                    figure_id, figure_id == 6 ? " (contour data)" : ""),
                        metadata_line(p)};
      if (figure_id == 6) {
        table.header = {"t", "omega0", "s_joint", "bound_margin"};
      } else {
        table.header = {"t", "omega0", "s_joint", "s_closed", "bound_margin"};
      }
      break;
    }
  }
  return out;
}

std::vector<WrittenFile> emit_figure_data(int figure_id, const FigureParams& params,
                                          const std::filesystem::path& out_dir) {
  FigureData data = figure_data(figure_id, params);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(fmt::format("cannot create '{}': {}", out_dir.string(), ec.message()));
  const auto path = out_dir / data.file_name;
  write_table(path, data.table);
  return {{path, data.table.rows.size()}};
}

}  // namespace tdho
