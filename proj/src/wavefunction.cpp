#include "tdho/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tdho/errors.hpp"
#include "tdho/fourier.hpp"
#include "tdho/hermite.hpp"

namespace tdho {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEdgeDecay = 1e-12;
constexpr std::size_t kDefaultPoints = 4096;
constexpr std::size_t kMaxPoints = std::size_t{1} << 22;

void require_pulsating(const Scenario& s) {
  if (s.kind() != ScenarioKind::PulsatingMass) {
    throw UnsupportedScenario("expected a pulsating-mass scenario");
  }
}

void require_inverse_square(const Scenario& s) {
  if (s.kind() != ScenarioKind::InverseSquareFrequency) {
    throw UnsupportedScenario("expected an inverse-square-frequency scenario");
  }
}

double level(int n) { return n + 0.5; }

double gaussian(double variance, double v) {
  return std::exp(-0.5 * v * v / variance) / std::sqrt(2.0 * kPi * variance);
}

}  // namespace

Complex psi_general(int n, const Scenario& s, const RhoSolution& rho, double t, double x) {
  s.require_domain(t);
  const RhoPoint r = rho.at(t);
  const double hbar = s.hbar();
  const double len = std::sqrt(hbar) * r.rho;
  const double m = mass_at(s, t);
  const double amp = hermite_function(n, x / len) / std::sqrt(len);
  const double phase = -level(n) * r.gamma + m * r.rho_dot * x * x / (2.0 * hbar * r.rho);
  return std::polar(amp, phase);
}

Complex psi_static(int n, const Scenario& s, double t, double x) {
  if (s.kind() != ScenarioKind::Static) throw UnsupportedScenario("expected a static scenario");
  const double k = s.m0() * s.omega0() / s.hbar();
  const double amp = std::sqrt(std::sqrt(k)) * hermite_function(n, std::sqrt(k) * x);
  return std::polar(amp, -level(n) * s.omega0() * t);
}

Complex psi_pulsating(int n, const Scenario& s, double t, double x) {
  require_pulsating(s);
  s.require_domain(t);
  const double hbar = s.hbar();
  const double nu = s.nu();
  const double big_omega = s.big_omega();
  const double c = std::cos(nu * t);
  const double m_t = s.m0() * c * c;
  const double width = m_t * big_omega / hbar;
  const double amp = std::sqrt(std::sqrt(width)) * hermite_function(n, std::sqrt(width) * x);
  const double beta = level(n) * big_omega * t;
  const double chirp = m_t * nu * std::tan(nu * t) * x * x / (2.0 * hbar);
  return std::polar(amp, chirp - beta);
}

Complex psi_inverse_square(int n, const Scenario& s, double t, double x) {
  require_inverse_square(s);
  s.require_domain(t);
  const double hbar = s.hbar();
  const double m = s.m0();
  const double w0 = s.omega0();
  const double k = m * w0 / hbar;
  const double amp = std::sqrt(std::sqrt(k) / t) * hermite_function(n, std::sqrt(k) * x / t);
  const double phase = level(n) * w0 / t + m * x * x / (2.0 * hbar * t);
  return std::polar(amp, phase);
}

Complex psi(int n, const Scenario& s, double t, double x, const RhoSolution* rho) {
  switch (s.kind()) {
    case ScenarioKind::Static: return psi_static(n, s, t, x);
    case ScenarioKind::PulsatingMass: return psi_pulsating(n, s, t, x);
    case ScenarioKind::InverseSquareFrequency: return psi_inverse_square(n, s, t, x);
    case ScenarioKind::Custom: break;
  }
  if (rho == nullptr) throw UnsupportedScenario("custom scenarios need a rho solution");
  return psi_general(n, s, *rho, t, x);
}

double WaveState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return sum * grid.spacing();
}

WaveState sample_state(int n, const Scenario& s, double t, const SpatialGrid& grid,
                       const RhoSolution* rho) {
  WaveState w{n, t, grid, s.kind(), std::vector<Complex>(grid.size())};
  for (std::size_t j = 0; j < grid.size(); ++j) w.amplitudes[j] = psi(n, s, t, grid.x(j), rho);
  return w;
}

std::vector<double> momentum_grid(const SpatialGrid& grid, double hbar) {
  const std::size_t n = grid.size();
  const double dp = 2.0 * kPi * hbar / (static_cast<double>(n) * grid.spacing());
  std::vector<double> p(n);
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::size_t k = 0; k < n; ++k) {
    p[k] = dp * static_cast<double>(static_cast<std::ptrdiff_t>(k) - half);
  }
  return p;
}

MomentumState momentum_transform(const WaveState& w, double hbar) {
  const std::size_t n = w.amplitudes.size();
  if (n != w.grid.size() || !is_power_of_two(n)) {
    throw GridTooSmall("momentum transform needs a power-of-two grid");
  }
  double peak = 0.0;
  for (const auto& a : w.amplitudes) peak = std::max(peak, std::norm(a));
  if (!(peak > 0.0)) throw GridTooSmall("wave function vanishes on the grid");
  const double edge = std::max(std::norm(w.amplitudes.front()), std::norm(w.amplitudes.back()));
  if (edge > kEdgeDecay * peak) {
    throw GridTooSmall(fmt::format("position density at the grid edge is {:.3g} of its peak",
                                   edge / peak));
  }

  const std::vector<Complex> spectrum = dft_forward(w.amplitudes);
  MomentumState out;
  out.p = momentum_grid(w.grid, hbar);
  out.dp = out.p[1] - out.p[0];
  out.amplitudes.resize(n);
  const double dx = w.grid.spacing();
  const double scale = dx / std::sqrt(2.0 * kPi * hbar);
  const double x0 = w.grid.x_min();
  for (std::size_t k = 0; k < n; ++k) {
    // Ascending index k corresponds to DFT bin k - N/2 (mod N).
    const std::size_t bin = (k + n / 2) % n;
    out.amplitudes[k] = scale * std::polar(1.0, -out.p[k] * x0 / hbar) * spectrum[bin];
  }

  double p_peak = 0.0;
  for (const auto& a : out.amplitudes) p_peak = std::max(p_peak, std::norm(a));
  const double p_edge =
      std::max(std::norm(out.amplitudes.front()), std::norm(out.amplitudes.back()));
  if (p_edge > kEdgeDecay * p_peak) {
    throw GridTooSmall(fmt::format("momentum density at the grid edge is {:.3g} of its peak",
                                   p_edge / p_peak));
  }
  return out;
}

GaussianVariances ground_state_variances(const Scenario& s, double t, const RhoSolution* rho) {
  s.require_domain(t);
  const double hbar = s.hbar();
  switch (s.kind()) {
    case ScenarioKind::Static: {
      const double mw = s.m0() * s.omega0();
      return {hbar / (2.0 * mw), hbar * mw / 2.0};
    }
    case ScenarioKind::PulsatingMass: {
      const double nu = s.nu();
      const double big_omega = s.big_omega();
      const double c = std::cos(nu * t);
      const double m_t = s.m0() * c * c;
      const double tn = std::tan(nu * t);
      const double chirp = nu * nu * tn * tn + big_omega * big_omega;
      return {hbar / (2.0 * m_t * big_omega), hbar * m_t * chirp / (2.0 * big_omega)};
    }
    case ScenarioKind::InverseSquareFrequency: {
      const double m = s.m0();
      const double w0 = s.omega0();
      return {hbar * t * t / (2.0 * m * w0), hbar * m * (w0 * w0 + t * t) / (2.0 * w0 * t * t)};
    }
    case ScenarioKind::Custom: break;
  }
  if (rho == nullptr) throw UnsupportedScenario("custom scenarios need a rho solution");
  const RhoPoint r = rho->at(t);
  const double chirp = mass_at(s, t) * r.rho * r.rho_dot;
  return {hbar * r.rho * r.rho / 2.0, hbar / (2.0 * r.rho * r.rho) * (1.0 + chirp * chirp)};
}

double ground_position_density(const Scenario& s, double t, double x) {
  if (s.kind() == ScenarioKind::Custom) {
    throw UnsupportedScenario("closed-form densities need a named scenario");
  }
  return gaussian(ground_state_variances(s, t).position, x);
}

double ground_momentum_density(const Scenario& s, double t, double p) {
  if (s.kind() == ScenarioKind::Custom) {
    throw UnsupportedScenario("closed-form densities need a named scenario");
  }
  return gaussian(ground_state_variances(s, t).momentum, p);
}

SpatialGrid default_grid(const Scenario& s, int n, double t, const RhoSolution* rho) {
  const GaussianVariances v = ground_state_variances(s, t, rho);
  const double spread = std::sqrt(2.0 * n + 1.0);
  const double half_width = 10.0 * std::sqrt(v.position) * spread;
  // sigma_x sigma_p / hbar of the ground state, >= 1/2.
  const double product = std::sqrt(v.position * v.momentum) / s.hbar();
  const double needed = 128.0 * (2.0 * n + 1.0) * product;
  const std::size_t points =
      std::max(kDefaultPoints, next_power_of_two(static_cast<std::size_t>(std::ceil(needed))));
  if (points > kMaxPoints) {
    throw GridTooSmall(fmt::format("state at t = {} needs more than {} grid points", t, kMaxPoints));
  }
  return SpatialGrid::symmetric(half_width, points);
}

DensityPair density_pair(int n, const Scenario& s, double t, const SpatialGrid& grid,
                         DensityMode mode, const RhoSolution* rho) {
  const bool closed_form_available =
      n == 0 && (s.kind() == ScenarioKind::PulsatingMass ||
                 s.kind() == ScenarioKind::InverseSquareFrequency);
  bool analytic = false;
  switch (mode) {
    case DensityMode::Auto: analytic = closed_form_available; break;
    case DensityMode::Analytic:
      if (n != 0 || s.kind() == ScenarioKind::Custom) {
        throw UnsupportedScenario("closed-form densities exist only for named ground states");
      }
      analytic = true;
      break;
    case DensityMode::Numeric: analytic = false; break;
  }

  DensityPair d;
  d.t = t;
  d.dx = grid.spacing();
  d.x.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) d.x[j] = grid.x(j);

  if (analytic) {
    d.path = DensityPath::Analytic;
    d.p = momentum_grid(grid, s.hbar());
    d.dp = d.p[1] - d.p[0];
    d.density_x.resize(d.x.size());
    d.density_p.resize(d.p.size());
    for (std::size_t j = 0; j < d.x.size(); ++j) d.density_x[j] = ground_position_density(s, t, d.x[j]);
    for (std::size_t k = 0; k < d.p.size(); ++k) d.density_p[k] = ground_momentum_density(s, t, d.p[k]);
    return d;
  }

  d.path = DensityPath::Numeric;
  const WaveState w = sample_state(n, s, t, grid, rho);
  const MomentumState m = momentum_transform(w, s.hbar());
  d.density_x.resize(w.amplitudes.size());
  for (std::size_t j = 0; j < w.amplitudes.size(); ++j) d.density_x[j] = std::norm(w.amplitudes[j]);
  d.p = m.p;
  d.dp = m.dp;
  d.density_p.resize(m.amplitudes.size());
  for (std::size_t k = 0; k < m.amplitudes.size(); ++k) d.density_p[k] = std::norm(m.amplitudes[k]);
  return d;
}

}  // namespace tdho
