#pragma once

// Oscillator scenarios (mass and frequency profiles) and the grids shared by
// the rest of the library. Everything here is immutable after construction.

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <string_view>

#include <json.hpp>

namespace tdho {

enum class ScenarioKind { Static, PulsatingMass, InverseSquareFrequency, Custom };

std::string_view to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(std::string_view name);

using Profile = std::function<double(double)>;

// Earliest admissible time for inverse-square frequency scenarios.
inline constexpr double kInverseSquareMinTime = 1e-3;

class Scenario {
 public:
  static Scenario static_oscillator(double m0, double omega0, double hbar = 1.0);
  // m(t) = m0 cos^2(nu t), constant frequency omega0.
  static Scenario pulsating_mass(double m0, double omega0, double nu, double hbar = 1.0);
  // omega(t) = omega0 / t^2, constant mass m0, t >= kInverseSquareMinTime.
  static Scenario inverse_square_frequency(double m0, double omega0, double hbar = 1.0);
  // Arbitrary profiles on [t_lo, t_hi]. mass_rate is dm/dt; when empty it is
  // obtained by central differences of mass.
  static Scenario custom(Profile mass, Profile frequency, double hbar = 1.0,
                         Profile mass_rate = {},
                         double t_lo = -std::numeric_limits<double>::infinity(),
                         double t_hi = std::numeric_limits<double>::infinity());

  ScenarioKind kind() const { return kind_; }
  double m0() const { return m0_; }
  double omega0() const { return omega0_; }
  double nu() const { return nu_; }
  double hbar() const { return hbar_; }

  // Omega = sqrt(omega0^2 + nu^2); equals omega0 when nu = 0.
  double big_omega() const { return big_omega_; }

  // Half-width (in time) of the excluded neighbourhood around each zero of
  // cos(nu t); zero when there is no pulsation.
  double singular_guard() const;

  bool in_domain(double t) const;
  // True when every time in [a, b] is admissible (no mass zero inside).
  bool interval_in_domain(double a, double b) const;
  // Throws SingularityError near mass zeros, DomainError otherwise.
  void require_domain(double t) const;

  const Profile& custom_mass() const { return mass_; }
  const Profile& custom_frequency() const { return frequency_; }
  const Profile& custom_mass_rate() const { return mass_rate_; }

 private:
  Scenario() = default;

  ScenarioKind kind_ = ScenarioKind::Static;
  double m0_ = 1.0;
  double omega0_ = 1.0;
  double nu_ = 0.0;
  double hbar_ = 1.0;
  double big_omega_ = 1.0;
  double t_lo_ = -std::numeric_limits<double>::infinity();
  double t_hi_ = std::numeric_limits<double>::infinity();
  Profile mass_;
  Profile frequency_;
  Profile mass_rate_;
};

double mass_at(const Scenario& s, double t);
double mass_rate_at(const Scenario& s, double t);
double frequency_at(const Scenario& s, double t);

// {"kind": "pulsating-mass", "m0": 1.0, "omega0": 1.0, "nu": 0.5, "hbar": 1.0}
// Unknown keys raise ConfigError.
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);

// Uniform periodic grid x_j = x_min + j*dx, dx = (x_max - x_min)/n_points,
// j = 0..n_points-1. A symmetric grid has x = 0 at j = n_points/2.
class SpatialGrid {
 public:
  SpatialGrid(double x_min, double x_max, std::size_t n_points);

  static SpatialGrid symmetric(double half_width, std::size_t n_points) {
    return SpatialGrid(-half_width, half_width, n_points);
  }

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_points_; }
  double spacing() const { return (x_max_ - x_min_) / static_cast<double>(n_points_); }
  double x(std::size_t j) const { return x_min_ + static_cast<double>(j) * spacing(); }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_points_;
};

// n_steps equal steps; n_steps + 1 nodes including both ends.
class TimeGrid {
 public:
  TimeGrid(double t_start, double t_end, std::size_t n_steps);

  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }
  std::size_t n_steps() const { return n_steps_; }
  std::size_t size() const { return n_steps_ + 1; }
  double step() const { return (t_end_ - t_start_) / static_cast<double>(n_steps_); }
  double time(std::size_t i) const;

  // DomainError unless the whole interval is admissible for s.
  void require_interval(const Scenario& s) const;
  // DomainError unless every node is admissible for s.
  void require_nodes(const Scenario& s) const;

 private:
  double t_start_;
  double t_end_;
  std::size_t n_steps_;
};

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace tdho
