#include "tdho/entropy.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tdho/errors.hpp"
#include "tdho/wavefunction.hpp"

namespace tdho {

namespace {

constexpr double kPi = std::numbers::pi;

double planck_term(double hbar) { return std::log(2.0 * kPi * hbar); }

double gaussian_entropy(double variance) {
  return 0.5 * std::log(2.0 * kPi * std::numbers::e * variance);
}

}  // namespace

std::string_view to_string(EntropyMethod method) {
  switch (method) {
    case EntropyMethod::Quadrature: return "quadrature";
    case EntropyMethod::GaussianAnalytic: return "gaussian-analytic";
    case EntropyMethod::ClosedForm: return "closed-form";
  }
  return "unknown";
}

double differential_entropy(std::span<const double> density, double spacing) {
  if (density.size() < 2 || !(spacing > 0.0)) {
    throw NormalizationError("density needs at least two samples and positive spacing");
  }
  double mass = 0.0;
  double entropy = 0.0;
  const std::size_t last = density.size() - 1;
  for (std::size_t i = 0; i < density.size(); ++i) {
    const double rho = density[i];
    if (rho < 0.0 || !std::isfinite(rho)) {
      throw NormalizationError(fmt::format("density sample {} is {}", i, rho));
    }
    const double w = (i == 0 || i == last) ? 0.5 : 1.0;
    mass += w * rho;
    if (rho > 0.0) entropy -= w * rho * std::log(rho);
  }
  mass *= spacing;
  if (std::abs(mass - 1.0) > 1e-4) {
    throw NormalizationError(fmt::format("density integrates to {}, not 1", mass));
  }
  return entropy * spacing;
}

double gaussian_joint_entropy(double var_x, double var_p, double hbar) {
  if (!(var_x > 0.0) || !(var_p > 0.0) || !(hbar > 0.0)) {
    throw DomainError("Gaussian entropy needs positive variances and hbar");
  }
  return kJointEntropyBound + 0.5 * std::log(4.0 * var_x * var_p / (hbar * hbar));
}

EntropyRecord joint_entropy_numeric(int n, const Scenario& s, double t, const SpatialGrid& grid,
                                    const RhoSolution* rho) {
  const DensityPair d = density_pair(n, s, t, grid, DensityMode::Numeric, rho);
  EntropyRecord r{};
  r.t = t;
  r.s_x = differential_entropy(d.density_x, d.dx);
  r.s_p = differential_entropy(d.density_p, d.dp);
  r.s_joint = r.s_x + r.s_p - planck_term(s.hbar());
  r.s_closed = closed_form_entropy(n, s, t);
  r.bound_margin = r.s_joint - kJointEntropyBound;
  r.method = EntropyMethod::Quadrature;
  return r;
}

EntropyRecord joint_entropy_gaussian(const Scenario& s, double t, const RhoSolution* rho) {
  const GaussianVariances v = ground_state_variances(s, t, rho);
  EntropyRecord r{};
  r.t = t;
  r.s_x = gaussian_entropy(v.position);
  r.s_p = gaussian_entropy(v.momentum);
  r.s_joint = gaussian_joint_entropy(v.position, v.momentum, s.hbar());
  r.s_closed = s.kind() == ScenarioKind::Custom ? std::nullopt : closed_form_entropy(0, s, t);
  r.bound_margin = r.s_joint - kJointEntropyBound;
  r.method = EntropyMethod::GaussianAnalytic;
  return r;
}

double joint_entropy_closed_inverse_square(double omega0, double t) {
  if (!(omega0 > 0.0) || !(t > 0.0)) throw DomainError("needs omega0 > 0 and t > 0");
  const double ratio = t / omega0;
  return kJointEntropyBound + 0.5 * std::log1p(ratio * ratio);
}

double joint_entropy_pulsating_reference(const Scenario& s, double t) {
  if (s.kind() != ScenarioKind::PulsatingMass) {
    throw UnsupportedScenario("expected a pulsating-mass scenario");
  }
  s.require_domain(t);
  const double hbar = s.hbar();
  const double nu = s.nu();
  const double w = s.big_omega();
  const double m_t = mass_at(s, t);
  const double tn = std::tan(nu * t);
  const double root = std::sqrt(m_t * w);
  const double e = std::numbers::e;
  return 0.5 * (std::log(e * e / 4.0) + std::log(1.0 / (kPi * hbar * root)) +
                root * (1.0 - std::log(w / (kPi * hbar * (nu * nu * tn * tn + w * w)))));
}

std::optional<double> closed_form_entropy(int n, const Scenario& s, double t) {
  if (n != 0) return std::nullopt;
  switch (s.kind()) {
    case ScenarioKind::Static: return kJointEntropyBound;
    case ScenarioKind::InverseSquareFrequency:
      return joint_entropy_closed_inverse_square(s.omega0(), t);
    case ScenarioKind::PulsatingMass: return joint_entropy_pulsating_reference(s, t);
    case ScenarioKind::Custom: break;
  }
  return std::nullopt;
}

double leipnik_bound_margin(const EntropyRecord& record) {
  const double margin = record.s_joint - kJointEntropyBound;
  if (margin < -kBoundTolerance) {
    throw BoundViolation(fmt::format("joint entropy {} is below ln(e/2) by {} at t = {}",
                                     record.s_joint, -margin, record.t));
  }
  return margin;
}

}  // namespace tdho
