// tdho: command-line driver for run configurations and figure data.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tdho/errors.hpp"
#include "tdho/figures.hpp"
#include "tdho/run.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

tdho::FigureParams parse_params(const std::vector<std::string>& items) {
  tdho::FigureParams params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw tdho::ConfigError(fmt::format("--param expects key=value, got '{}'", item));
    }
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw tdho::ConfigError(fmt::format("--param {}: '{}' is not a number", key, text));
    }
    params[key] = value;
  }
  return params;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const tdho::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tdho::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const tdho::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-dependent harmonic oscillator: densities, propagators and joint entropy"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Execute a JSON run configuration");
  run_cmd->add_option("config", config_path, "Path to the configuration file")->required();

  int figure_id = 0;
  std::string out_dir;
  std::vector<std::string> param_items;
  auto* fig_cmd = app.add_subcommand("figure", "Emit the data behind one figure (1-7)");
  fig_cmd->add_option("id", figure_id, "Figure number")->required();
  fig_cmd->add_option("--out", out_dir, "Output directory")->required();
  fig_cmd->add_option("--param", param_items, "Override a figure parameter, key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*run_cmd) {
    return guarded([&] {
      const tdho::RunReport report = tdho::run(tdho::load_run_config(config_path));
      std::cout << report.to_json().dump(2) << '\n';
      if (report.bound_violations > 0) {
        std::cerr << "entropy bound violated in " << report.bound_violations << " rows\n";
        return kExitFailure;
      }
      return 0;
    });
  }
  return guarded([&] {
    const auto files = tdho::emit_figure_data(figure_id, parse_params(param_items), out_dir);
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : files) j.push_back({{"path", f.path.string()}, {"rows", f.rows}});
    std::cout << nlohmann::json{{"files", j}}.dump(2) << '\n';
    return 0;
  });
}
