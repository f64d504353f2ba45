#pragma once

// Differential (Shannon) entropies of the position and momentum densities and
// the joint entropy S_j = s_x + s_p - ln(2 pi hbar), in nats.

#include <numbers>
#include <optional>
#include <span>
#include <string_view>

#include "tdho/ermakov.hpp"
#include "tdho/model.hpp"

namespace tdho {

// Lower bound of the joint entropy for any pure state: ln(e/2).
inline const double kJointEntropyBound = 1.0 - std::numbers::ln2;
inline constexpr double kBoundTolerance = 1e-6;

enum class EntropyMethod { Quadrature, GaussianAnalytic, ClosedForm };
std::string_view to_string(EntropyMethod method);

struct EntropyRecord {
  double t;
  double s_x;
  double s_p;
  double s_joint;
  std::optional<double> s_closed;
  double bound_margin;
  EntropyMethod method;
};

// Trapezoid rule for -integral rho ln rho on a uniform grid, 0 ln 0 = 0.
// NormalizationError when the density is negative or integrates to 1 +- 1e-4
// only outside that band.
double differential_entropy(std::span<const double> density, double spacing);

// ln(e/2) + 1/2 ln(4 var_x var_p / hbar^2).
double gaussian_joint_entropy(double var_x, double var_p, double hbar);

// Quadrature of |psi_n|^2 and of the FFT momentum density on grid.
EntropyRecord joint_entropy_numeric(int n, const Scenario& s, double t, const SpatialGrid& grid,
                                    const RhoSolution* rho = nullptr);

// Gaussian shortcut from the closed-form ground-state variances.
EntropyRecord joint_entropy_gaussian(const Scenario& s, double t, const RhoSolution* rho = nullptr);

// ln[(e/2) sqrt((omega0^2 + t^2) / omega0^2)]; depends on t / omega0 only.
double joint_entropy_closed_inverse_square(double omega0, double t);

// Reference closed form quoted for the pulsating ground state,
//   1/2 [ ln(e^2/4) + ln(1/(pi hbar sqrt(m(t) Omega)))
//         + sqrt(m(t) Omega) (1 - ln(Omega / (pi hbar (nu^2 tan^2 nu t + Omega^2)))) ],
// evaluated verbatim. It is not a ground truth: it disagrees with quadrature
// and is carried only so sweeps can report the gap.
double joint_entropy_pulsating_reference(const Scenario& s, double t);

// Closed-form ground-state value offered for s_closed columns: ln(e/2) for
// static, the inverse-square form, and the pulsating reference form.
std::optional<double> closed_form_entropy(int n, const Scenario& s, double t);

// s_joint - ln(e/2); BoundViolation below -1e-6.
double leipnik_bound_margin(const EntropyRecord& record);

}  // namespace tdho
