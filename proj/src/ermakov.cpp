#include "tdho/ermakov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "tdho/csv.hpp"
#include "tdho/errors.hpp"

namespace tdho {

namespace {

using State = std::array<double, 3>;  // rho, rho', gamma

double rho_acceleration(const Scenario& s, double t, double rho, double rho_dot) {
  const double m = mass_at(s, t);
  const double w = frequency_at(s, t);
  return 1.0 / (m * m * rho * rho * rho) - mass_rate_at(s, t) / m * rho_dot - w * w * rho;
}

State derivative(const Scenario& s, double t, const State& y) {
  if (!(y[0] > kRhoFloor)) {
    throw SingularityError(fmt::format("rho dropped below {} at t = {}", kRhoFloor, t));
  }
  return {y[1], rho_acceleration(s, t, y[0], y[1]), 1.0 / (mass_at(s, t) * y[0] * y[0])};
}

State axpy(const State& y, double h, const State& k) {
  return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]};
}

// Cubic Hermite interpolation on [0, 1] with end slopes already scaled by h.
double hermite_interp(double s, double f0, double f1, double d0, double d1) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * f0 + (s3 - 2 * s2 + s) * d0 + (-2 * s3 + 3 * s2) * f1 +
         (s3 - s2) * d1;
}

}  // namespace

RhoSolution::RhoSolution(std::vector<double> times, std::vector<double> rho,
                         std::vector<double> rho_dot, std::vector<double> rho_ddot,
                         std::vector<double> gamma, std::vector<double> gamma_rate,
                         RhoSource source)
    : times_(std::move(times)),
      rho_(std::move(rho)),
      rho_dot_(std::move(rho_dot)),
      rho_ddot_(std::move(rho_ddot)),
      gamma_(std::move(gamma)),
      gamma_rate_(std::move(gamma_rate)),
      source_(source) {
  const std::size_t n = times_.size();
  if (n < 2 || rho_.size() != n || rho_dot_.size() != n || rho_ddot_.size() != n ||
      gamma_.size() != n || gamma_rate_.size() != n) {
    throw DomainError("rho solution needs at least two nodes and matching column lengths");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && !(times_[i] > times_[i - 1])) {
      throw DomainError("rho solution times must be strictly increasing");
    }
    if (!(rho_[i] > 0.0)) throw DomainError("rho must be positive at every node");
  }
}

RhoPoint RhoSolution::at(double t) const {
  if (!covers(t)) {
    throw DomainError(fmt::format("t = {} outside rho coverage [{}, {}]", t, t_front(), t_back()));
  }
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t i = it == times_.begin() ? 0 : static_cast<std::size_t>(it - times_.begin()) - 1;
  if (i + 1 >= times_.size()) i = times_.size() - 2;
  if (t == times_[i]) return {rho_[i], rho_dot_[i], gamma_[i]};
  if (t == times_[i + 1]) return {rho_[i + 1], rho_dot_[i + 1], gamma_[i + 1]};
  const double h = times_[i + 1] - times_[i];
  const double u = (t - times_[i]) / h;
  return {
      hermite_interp(u, rho_[i], rho_[i + 1], h * rho_dot_[i], h * rho_dot_[i + 1]),
      hermite_interp(u, rho_dot_[i], rho_dot_[i + 1], h * rho_ddot_[i], h * rho_ddot_[i + 1]),
      hermite_interp(u, gamma_[i], gamma_[i + 1], h * gamma_rate_[i], h * gamma_rate_[i + 1]),
  };
}

RhoSolution solve_ermakov(const Scenario& s, double rho_init, double rho_dot_init,
                          const TimeGrid& grid) {
  if (!(rho_init > 0.0)) throw DomainError("initial rho must be positive");
  grid.require_interval(s);

  const std::size_t n = grid.size();
  std::vector<double> times(n), rho(n), rho_dot(n), rho_ddot(n), gamma(n), gamma_rate(n);
  State y{rho_init, rho_dot_init, 0.0};
  const double h = grid.step();

  auto record = [&](std::size_t i, double t) {
    times[i] = t;
    rho[i] = y[0];
    rho_dot[i] = y[1];
    gamma[i] = y[2];
    const State d = derivative(s, t, y);
    rho_ddot[i] = d[1];
    gamma_rate[i] = d[2];
  };

  record(0, grid.time(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double t = grid.time(i);
    const State k1 = derivative(s, t, y);
    const State k2 = derivative(s, t + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = derivative(s, t + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = derivative(s, t + h, axpy(y, h, k3));
    for (std::size_t c = 0; c < 3; ++c) {
      y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    }
    record(i + 1, grid.time(i + 1));
  }
  return RhoSolution(std::move(times), std::move(rho), std::move(rho_dot), std::move(rho_ddot),
                     std::move(gamma), std::move(gamma_rate), RhoSource::Numeric);
}

RhoValue analytic_rho(const Scenario& s, double t) {
  s.require_domain(t);
  switch (s.kind()) {
    case ScenarioKind::Static: return {1.0 / std::sqrt(s.m0() * s.omega0()), 0.0};
    case ScenarioKind::InverseSquareFrequency: {
      const double k = 1.0 / std::sqrt(s.m0() * s.omega0());
      return {k * t, k};
    }
    case ScenarioKind::PulsatingMass: {
      // Width of the pulsating ground state: rho = 1/(sqrt(m0 Omega) |cos nu t|).
      const double k = 1.0 / std::sqrt(s.m0() * s.big_omega());
      const double c = std::abs(std::cos(s.nu() * t));
      const double rho = k / c;
      return {rho, rho * s.nu() * std::tan(s.nu() * t)};
    }
    case ScenarioKind::Custom: break;
  }
  throw UnsupportedScenario("no closed-form rho for custom scenarios");
}

double analytic_gamma(const Scenario& s, double t) {
  s.require_domain(t);
  switch (s.kind()) {
    case ScenarioKind::Static: return s.omega0() * t;
    case ScenarioKind::PulsatingMass: return s.big_omega() * t;
    case ScenarioKind::InverseSquareFrequency: return -s.omega0() / t;
    case ScenarioKind::Custom: break;
  }
  throw UnsupportedScenario("no closed-form phase for custom scenarios");
}

RhoSolution analytic_solution(const Scenario& s, const TimeGrid& grid) {
  if (s.kind() == ScenarioKind::Custom) {
    throw UnsupportedScenario("no closed-form rho for custom scenarios");
  }
  grid.require_interval(s);
  const std::size_t n = grid.size();
  std::vector<double> times(n), rho(n), rho_dot(n), rho_ddot(n), gamma(n), gamma_rate(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.time(i);
    const RhoValue r = analytic_rho(s, t);
    times[i] = t;
    rho[i] = r.rho;
    rho_dot[i] = r.rho_dot;
    rho_ddot[i] = rho_acceleration(s, t, r.rho, r.rho_dot);
    gamma[i] = analytic_gamma(s, t);
    gamma_rate[i] = 1.0 / (mass_at(s, t) * r.rho * r.rho);
  }
  return RhoSolution(std::move(times), std::move(rho), std::move(rho_dot), std::move(rho_ddot),
                     std::move(gamma), std::move(gamma_rate), RhoSource::Analytic);
}

double phase_gamma(const Scenario& s, double t1, double t2, const RhoSolution& rho) {
  if (!(t1 <= t2)) throw DomainError("phase_gamma needs t1 <= t2");
  if (!rho.covers(t1) || !rho.covers(t2)) {
    throw DomainError(fmt::format("[{}, {}] not covered by the rho solution", t1, t2));
  }
  s.require_domain(t1);
  s.require_domain(t2);
  if (t1 == t2) return 0.0;
  return rho.at(t2).gamma - rho.at(t1).gamma;
}

double ermakov_residual(const Scenario& s, const RhoSolution& rho) {
  const std::size_t n = rho.size();
  if (n < 5) throw DomainError("ermakov_residual needs at least five nodes");
  const auto t = rho.times();
  const auto r = rho.rho();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = t[i] - t[i - 1];
    const double hr = t[i + 1] - t[i];
    // Non-uniform three-point stencils; reduce to the usual ones when hl == hr.
    const double d1 = (r[i + 1] * hl * hl - r[i - 1] * hr * hr + r[i] * (hr * hr - hl * hl)) /
                      (hl * hr * (hl + hr));
    const double d2 = 2.0 * (r[i + 1] * hl + r[i - 1] * hr - r[i] * (hl + hr)) /
                      (hl * hr * (hl + hr));
    const double m = mass_at(s, t[i]);
    const double w = frequency_at(s, t[i]);
    const double res =
        d2 + mass_rate_at(s, t[i]) / m * d1 + w * w * r[i] - 1.0 / (m * m * r[i] * r[i] * r[i]);
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

void write_csv(std::ostream& out, const RhoSolution& rho) {
  out << "t,rho,rho_dot,gamma\n";
  for (std::size_t i = 0; i < rho.size(); ++i) {
    out << csv_number(rho.times()[i]) << ',' << csv_number(rho.rho()[i]) << ','
        << csv_number(rho.rho_dot()[i]) << ',' << csv_number(rho.gamma()[i]) << '\n';
  }
}

}  // namespace tdho
