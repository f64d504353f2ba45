#include "tdho/model.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tdho/errors.hpp"

namespace tdho {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(fmt::format("{} must be positive and finite, got {}", name, v));
  }
}

// Distance from t to the nearest zero of cos(nu t).
double distance_to_mass_zero(double nu, double t) {
  const double pi = std::numbers::pi;
  const double k = std::round(nu * t / pi - 0.5);
  return std::abs(t - (k + 0.5) * pi / nu);
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Static: return "static";
    case ScenarioKind::PulsatingMass: return "pulsating-mass";
    case ScenarioKind::InverseSquareFrequency: return "inverse-square-frequency";
    case ScenarioKind::Custom: return "custom";
  }
  return "unknown";
}

ScenarioKind scenario_kind_from_string(std::string_view name) {
  if (name == "static") return ScenarioKind::Static;
  if (name == "pulsating-mass") return ScenarioKind::PulsatingMass;
  if (name == "inverse-square-frequency") return ScenarioKind::InverseSquareFrequency;
  if (name == "custom") return ScenarioKind::Custom;
  throw ConfigError(fmt::format("unknown scenario kind '{}'", name));
}

Scenario Scenario::static_oscillator(double m0, double omega0, double hbar) {
  require_positive(m0, "m0");
  require_positive(omega0, "omega0");
  require_positive(hbar, "hbar");
  Scenario s;
  s.kind_ = ScenarioKind::Static;
  s.m0_ = m0;
  s.omega0_ = omega0;
  s.hbar_ = hbar;
  s.big_omega_ = omega0;
  return s;
}

Scenario Scenario::pulsating_mass(double m0, double omega0, double nu, double hbar) {
  require_positive(m0, "m0");
  require_positive(omega0, "omega0");
  require_positive(hbar, "hbar");
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError(fmt::format("nu must be non-negative and finite, got {}", nu));
  }
  Scenario s;
  s.kind_ = ScenarioKind::PulsatingMass;
  s.m0_ = m0;
  s.omega0_ = omega0;
  s.nu_ = nu;
  s.hbar_ = hbar;
  s.big_omega_ = std::sqrt(omega0 * omega0 + nu * nu);
  return s;
}

Scenario Scenario::inverse_square_frequency(double m0, double omega0, double hbar) {
  require_positive(m0, "m0");
  require_positive(omega0, "omega0");
  require_positive(hbar, "hbar");
  Scenario s;
  s.kind_ = ScenarioKind::InverseSquareFrequency;
  s.m0_ = m0;
  s.omega0_ = omega0;
  s.hbar_ = hbar;
  s.big_omega_ = omega0;
  s.t_lo_ = kInverseSquareMinTime;
  return s;
}

Scenario Scenario::custom(Profile mass, Profile frequency, double hbar, Profile mass_rate,
                          double t_lo, double t_hi) {
  require_positive(hbar, "hbar");
  if (!mass || !frequency) throw DomainError("custom scenario needs mass and frequency profiles");
  if (!(t_lo < t_hi)) throw DomainError("custom scenario needs t_lo < t_hi");
  Scenario s;
  s.kind_ = ScenarioKind::Custom;
  s.hbar_ = hbar;
  s.t_lo_ = t_lo;
  s.t_hi_ = t_hi;
  s.mass_ = std::move(mass);
  s.frequency_ = std::move(frequency);
  s.mass_rate_ = std::move(mass_rate);
  s.m0_ = std::numeric_limits<double>::quiet_NaN();
  s.omega0_ = std::numeric_limits<double>::quiet_NaN();
  s.big_omega_ = std::numeric_limits<double>::quiet_NaN();
  return s;
}

double Scenario::singular_guard() const {
  if (kind_ != ScenarioKind::PulsatingMass || nu_ == 0.0) return 0.0;
  return 1e-3 * std::numbers::pi / nu_;
}

bool Scenario::in_domain(double t) const {
  if (!std::isfinite(t)) return false;
  switch (kind_) {
    case ScenarioKind::Static: return true;
    case ScenarioKind::PulsatingMass:
      return nu_ == 0.0 || distance_to_mass_zero(nu_, t) >= singular_guard();
    case ScenarioKind::InverseSquareFrequency: return t >= t_lo_;
    case ScenarioKind::Custom: return t >= t_lo_ && t <= t_hi_ && mass_(t) > 0.0;
  }
  return false;
}

bool Scenario::interval_in_domain(double a, double b) const {
  if (!(a <= b) || !in_domain(a) || !in_domain(b)) return false;
  if (kind_ == ScenarioKind::PulsatingMass && nu_ > 0.0) {
    // First zero of cos(nu t) after a; it must lie beyond b.
    const double pi = std::numbers::pi;
    const double k = std::ceil(nu_ * a / pi - 0.5);
    const double zero = (k + 0.5) * pi / nu_;
    return zero > b;
  }
  return true;
}

void Scenario::require_domain(double t) const {
  if (in_domain(t)) return;
  if (kind_ == ScenarioKind::PulsatingMass && std::isfinite(t)) {
    throw SingularityError(fmt::format(
        "t = {} lies within {} of a zero of the pulsating mass", t, singular_guard()));
  }
  throw DomainError(fmt::format("t = {} is outside the {} scenario domain", t, to_string(kind_)));
}

double mass_at(const Scenario& s, double t) {
  s.require_domain(t);
  switch (s.kind()) {
    case ScenarioKind::Static:
    case ScenarioKind::InverseSquareFrequency: return s.m0();
    case ScenarioKind::PulsatingMass: {
      const double c = std::cos(s.nu() * t);
      return s.m0() * c * c;
    }
    case ScenarioKind::Custom: return s.custom_mass()(t);
  }
  return 0.0;
}

double mass_rate_at(const Scenario& s, double t) {
  s.require_domain(t);
  switch (s.kind()) {
    case ScenarioKind::Static:
    case ScenarioKind::InverseSquareFrequency: return 0.0;
    case ScenarioKind::PulsatingMass:
      return -s.m0() * s.nu() * std::sin(2.0 * s.nu() * t);
    case ScenarioKind::Custom: {
      if (s.custom_mass_rate()) return s.custom_mass_rate()(t);
      const double h = 1e-5 * std::max(1.0, std::abs(t));
      const auto& m = s.custom_mass();
      return (m(t + h) - m(t - h)) / (2.0 * h);
    }
  }
  return 0.0;
}

double frequency_at(const Scenario& s, double t) {
  s.require_domain(t);
  switch (s.kind()) {
    case ScenarioKind::Static:
    case ScenarioKind::PulsatingMass: return s.omega0();
    case ScenarioKind::InverseSquareFrequency: return s.omega0() / (t * t);
    case ScenarioKind::Custom: return s.custom_frequency()(t);
  }
  return 0.0;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "kind" && key != "m0" && key != "omega0" && key != "nu" && key != "hbar") {
      throw ConfigError(fmt::format("unknown scenario key '{}'", key));
    }
    if (key != "kind" && !value.is_number()) {
      throw ConfigError(fmt::format("scenario key '{}' must be a number", key));
    }
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("scenario needs a string 'kind'");
  }
  const ScenarioKind kind = scenario_kind_from_string(j["kind"].get<std::string>());
  const double m0 = j.value("m0", 1.0);
  const double omega0 = j.value("omega0", 1.0);
  const double nu = j.value("nu", 0.0);
  const double hbar = j.value("hbar", 1.0);
  if (j.contains("nu") && kind != ScenarioKind::PulsatingMass) {
    throw ConfigError("'nu' applies only to pulsating-mass scenarios");
  }
  try {
    switch (kind) {
      case ScenarioKind::Static: return Scenario::static_oscillator(m0, omega0, hbar);
      case ScenarioKind::PulsatingMass: return Scenario::pulsating_mass(m0, omega0, nu, hbar);
      case ScenarioKind::InverseSquareFrequency:
        return Scenario::inverse_square_frequency(m0, omega0, hbar);
      case ScenarioKind::Custom: break;
    }
  } catch (const DomainError& e) {
    throw ConfigError(fmt::format("invalid scenario: {}", e.what()));
  }
  throw ConfigError("custom scenarios carry callables and cannot be built from JSON");
}

nlohmann::json scenario_to_json(const Scenario& s) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(s.kind()));
  if (s.kind() == ScenarioKind::Custom) {
    j["hbar"] = s.hbar();
    return j;
  }
  j["m0"] = s.m0();
  j["omega0"] = s.omega0();
  if (s.kind() == ScenarioKind::PulsatingMass) j["nu"] = s.nu();
  j["hbar"] = s.hbar();
  return j;
}

SpatialGrid::SpatialGrid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw DomainError("spatial grid needs finite x_min < x_max");
  }
  if (n_points < 16 || !is_power_of_two(n_points)) {
    throw DomainError(fmt::format("spatial grid needs a power of two >= 16 points, got {}", n_points));
  }
}

TimeGrid::TimeGrid(double t_start, double t_end, std::size_t n_steps)
    : t_start_(t_start), t_end_(t_end), n_steps_(n_steps) {
  if (!(t_start < t_end) || !std::isfinite(t_start) || !std::isfinite(t_end)) {
    throw DomainError("time grid needs finite t_start < t_end");
  }
  if (n_steps == 0) throw DomainError("time grid needs at least one step");
}

double TimeGrid::time(std::size_t i) const {
  if (i == n_steps_) return t_end_;
  return t_start_ + (t_end_ - t_start_) * static_cast<double>(i) / static_cast<double>(n_steps_);
}

void TimeGrid::require_interval(const Scenario& s) const {
  if (!s.interval_in_domain(t_start_, t_end_)) {
    if (s.kind() == ScenarioKind::PulsatingMass) {
      throw SingularityError(fmt::format("time interval [{}, {}] contains a zero of the pulsating mass",
                                         t_start_, t_end_));
    }
    throw DomainError(fmt::format("time interval [{}, {}] leaves the {} scenario domain",
                                  t_start_, t_end_, to_string(s.kind())));
  }
}

void TimeGrid::require_nodes(const Scenario& s) const {
  for (std::size_t i = 0; i < size(); ++i) s.require_domain(time(i));
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace tdho
