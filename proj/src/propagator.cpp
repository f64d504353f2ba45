#include "tdho/propagator.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tdho/errors.hpp"
#include "tdho/hermite.hpp"
#include "tdho/series.hpp"
#include "tdho/wavefunction.hpp"

namespace tdho {

namespace {

constexpr double kPi = std::numbers::pi;

// Rho data at both ends of a propagation from (t_from) to (t_to); t_to may
// precede t_from for the backward kernel.
struct Ends {
  RhoPoint from;
  RhoPoint to;
  double m_from;
  double m_to;
  double dgamma;
  double sin_d;
};

void check_caustic(double dgamma) {
  const double a = std::abs(dgamma);
  if (!(a < kPi) || std::abs(std::sin(dgamma)) < kCausticGuard) {
    throw CausticError(fmt::format(
        "phase advance {} is at or beyond the first caustic (kernel needs 0 < |dgamma| < pi)",
        dgamma));
  }
}

Ends ends(const Scenario& s, const RhoSolution& rho, double t_to, double t_from) {
  if (t_to == t_from) throw DomainError("kernel needs distinct start and end times");
  const double lo = std::min(t_to, t_from);
  const double hi = std::max(t_to, t_from);
  if (!s.interval_in_domain(lo, hi)) {
    throw DomainError(fmt::format("[{}, {}] leaves the {} scenario domain", lo, hi,
                                  to_string(s.kind())));
  }
  Ends e{rho.at(t_from), rho.at(t_to), mass_at(s, t_from), mass_at(s, t_to), 0.0, 0.0};
  e.dgamma = e.to.gamma - e.from.gamma;
  check_caustic(e.dgamma);
  e.sin_d = std::sin(e.dgamma);
  return e;
}

double action_between(const Ends& e, double x_to, double x_from) {
  const double a = x_from / e.from.rho;
  const double b = x_to / e.to.rho;
  const double boundary = 0.5 * e.m_to * x_to * x_to * (e.to.rho_dot / e.to.rho) -
                          0.5 * e.m_from * x_from * x_from * (e.from.rho_dot / e.from.rho);
  return boundary + 0.5 * (a * a + b * b) * std::cos(e.dgamma) / e.sin_d - a * b / e.sin_d;
}

Complex prefactor_between(const Ends& e, double hbar) {
  return std::sqrt(Complex(1.0) / Complex(0.0, 2.0 * kPi * hbar * e.from.rho * e.to.rho * e.sin_d));
}

KernelValue kernel_between(const Scenario& s, const RhoSolution& rho, double x_to, double t_to,
                           double x_from, double t_from) {
  const Ends e = ends(s, rho, t_to, t_from);
  const Complex f = prefactor_between(e, s.hbar());
  const double action = action_between(e, x_to, x_from);
  return {f * std::polar(1.0, action / s.hbar()), std::abs(e.sin_d) < kCausticWarning};
}

}  // namespace

double phase_advance(const Scenario& s, const RhoSolution& rho, const BoundaryData& b) {
  if (!(b.t_start < b.t_end)) throw DomainError("boundary data needs t_start < t_end");
  return ends(s, rho, b.t_end, b.t_start).dgamma;
}

double classical_path(const Scenario& s, const RhoSolution& rho, const BoundaryData& b, double t) {
  if (!(b.t_start < b.t_end)) throw DomainError("boundary data needs t_start < t_end");
  if (t < b.t_start || t > b.t_end) {
    throw DomainError(fmt::format("t = {} outside [{}, {}]", t, b.t_start, b.t_end));
  }
  const Ends e = ends(s, rho, b.t_end, b.t_start);
  if (t == b.t_start) return b.x_start;
  if (t == b.t_end) return b.x_end;
  const RhoPoint r = rho.at(t);
  return r.rho / e.sin_d *
         (b.x_start / e.from.rho * std::sin(e.to.gamma - r.gamma) +
          b.x_end / e.to.rho * std::sin(r.gamma - e.from.gamma));
}

double classical_action(const Scenario& s, const RhoSolution& rho, const BoundaryData& b) {
  if (!(b.t_start < b.t_end)) throw DomainError("boundary data needs t_start < t_end");
  return action_between(ends(s, rho, b.t_end, b.t_start), b.x_end, b.x_start);
}

Complex kernel_prefactor(const Scenario& s, const RhoSolution& rho, const BoundaryData& b) {
  if (!(b.t_start < b.t_end)) throw DomainError("boundary data needs t_start < t_end");
  return prefactor_between(ends(s, rho, b.t_end, b.t_start), s.hbar());
}

KernelValue kernel(const Scenario& s, const RhoSolution& rho, const BoundaryData& b) {
  if (!(b.t_start < b.t_end)) throw DomainError("boundary data needs t_start < t_end");
  return kernel_between(s, rho, b.x_end, b.t_end, b.x_start, b.t_start);
}

KernelValue adjoint_kernel(const Scenario& s, const RhoSolution& rho, const BoundaryData& b) {
  if (!(b.t_start < b.t_end)) throw DomainError("boundary data needs t_start < t_end");
  return kernel_between(s, rho, b.x_start, b.t_start, b.x_end, b.t_end);
}

KernelValue kernel_pulsating(const Scenario& s, const BoundaryData& b) {
  if (s.kind() != ScenarioKind::PulsatingMass) {
    throw UnsupportedScenario("expected a pulsating-mass scenario");
  }
  if (!(b.t_start < b.t_end)) throw DomainError("boundary data needs t_start < t_end");
  if (!s.interval_in_domain(b.t_start, b.t_end)) {
    throw SingularityError("boundary interval contains a zero of the pulsating mass");
  }
  const double hbar = s.hbar();
  const double m = s.m0();
  const double nu = s.nu();
  const double w = s.big_omega();
  const double c1 = std::cos(nu * b.t_start);
  const double c2 = std::cos(nu * b.t_end);
  const double x1 = b.x_start;
  const double x2 = b.x_end;
  const double arg = w * (b.t_end - b.t_start);
  check_caustic(arg);
  const double sn = std::sin(arg);
  const Complex pref = std::sqrt(Complex(m * w * c1 * c2) / Complex(0.0, 2.0 * kPi * hbar * sn));
  const double chirp = m * nu / (2.0 * hbar) *
                       (c2 * c2 * std::tan(nu * b.t_end) * x2 * x2 -
                        c1 * c1 * std::tan(nu * b.t_start) * x1 * x1);
  const double bulk = m * w / (2.0 * hbar * sn) *
                      ((c2 * c2 * x2 * x2 + c1 * c1 * x1 * x1) * std::cos(arg) -
                       2.0 * c1 * c2 * x2 * x1);
  return {pref * std::polar(1.0, chirp + bulk), std::abs(sn) < kCausticWarning};
}

KernelValue kernel_inverse_square(const Scenario& s, const BoundaryData& b) {
  if (s.kind() != ScenarioKind::InverseSquareFrequency) {
    throw UnsupportedScenario("expected an inverse-square-frequency scenario");
  }
  if (!(b.t_start < b.t_end)) throw DomainError("boundary data needs t_start < t_end");
  s.require_domain(b.t_start);
  const double hbar = s.hbar();
  const double m = s.m0();
  const double w0 = s.omega0();
  const double t1 = b.t_start;
  const double t2 = b.t_end;
  const double x1 = b.x_start;
  const double x2 = b.x_end;
  const double arg = w0 * (t2 - t1) / (t1 * t2);
  check_caustic(arg);
  const double sn = std::sin(arg);
  const Complex pref = std::sqrt(Complex(m * w0) / Complex(0.0, 2.0 * kPi * hbar * t1 * t2 * sn));
  const double chirp = m / (2.0 * hbar) * (x2 * x2 / t2 - x1 * x1 / t1);
  const double bulk = m * w0 / (2.0 * hbar * sn) *
                      ((x2 * x2 / (t2 * t2) + x1 * x1 / (t1 * t1)) * std::cos(arg) -
                       2.0 * x1 * x2 / (t1 * t2));
  return {pref * std::polar(1.0, chirp + bulk), std::abs(sn) < kCausticWarning};
}

std::vector<Complex> spectral_partial_sums(const Scenario& s, const BoundaryData& b, int n_max,
                                           const RhoSolution* rho) {
  if (n_max < 0 || n_max > kMaxQuantumNumber) {
    throw DomainError(fmt::format("n_max must lie in [0, {}]", kMaxQuantumNumber));
  }
  std::vector<Complex> sums;
  sums.reserve(static_cast<std::size_t>(n_max) + 1);
  Complex acc{};
  for (int n = 0; n <= n_max; ++n) {
    acc += std::conj(psi(n, s, b.t_start, b.x_start, rho)) * psi(n, s, b.t_end, b.x_end, rho);
    sums.push_back(acc);
  }
  return sums;
}

KernelValue spectral_kernel(const Scenario& s, const BoundaryData& b, int n_max,
                            SpectralSummation summation, const RhoSolution* rho) {
  const std::vector<Complex> sums = spectral_partial_sums(s, b, n_max, rho);
  const Complex value = summation == SpectralSummation::Resummed ? wynn_epsilon(sums) : sums.back();
  return {value, false};
}

MehlerCheck mehler_check(double u, double v, double z, int n_max) {
  if (!(std::abs(z) < 1.0)) throw DomainError("Mehler check needs |z| < 1");
  const std::vector<double> pu = hermite_functions(n_max, u);
  const std::vector<double> pv = hermite_functions(n_max, v);
  // (z/2)^n / n! H_n(u) H_n(v) exp(-(u^2+v^2)/2) = sqrt(pi) z^n phi_n(u) phi_n(v).
  const double root_pi = std::sqrt(kPi);
  double lhs = 0.0;
  double variant = 0.0;
  double zn = 1.0;
  double two_n = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    const double pp = root_pi * pu[n] * pv[n];
    lhs += zn * pp;
    variant += 0.25 * z * z * two_n * pp;
    zn *= z;
    two_n *= 2.0;
  }
  const double q = 1.0 - z * z;
  const double rhs =
      std::exp((4.0 * u * v * z - (u * u + v * v) * (1.0 + z * z)) / (2.0 * q)) / std::sqrt(q);
  return {lhs, rhs, std::abs(lhs - rhs), variant, std::abs(variant - rhs),
          std::abs(z) >= 0.95 && n_max < 48};
}

SemigroupResult semigroup_check(const Scenario& s, const RhoSolution& rho,
                                const BoundaryData& outer, double t_mid,
                                const SemigroupOptions& options) {
  if (!(outer.t_start < t_mid && t_mid < outer.t_end)) {
    throw DomainError("semigroup check needs t_start < t_mid < t_end");
  }
  if (options.levels < 2) throw DomainError("semigroup check needs at least two levels");
  const double hbar = s.hbar();
  const Complex direct = kernel(s, rho, outer).value;

  const Ends first = ends(s, rho, t_mid, outer.t_start);
  const Ends second = ends(s, rho, outer.t_end, t_mid);
  const double rho_mid = first.to.rho;
  // Quadratic and linear coefficients of the composed phase in y; the chirp
  // terms at t_mid cancel between the two kernels.
  const double quad = (std::cos(first.dgamma) / first.sin_d + std::cos(second.dgamma) / second.sin_d) /
                      (2.0 * hbar * rho_mid * rho_mid);
  const double lin = -(outer.x_start / (first.from.rho * rho_mid * first.sin_d) +
                       outer.x_end / (second.to.rho * rho_mid * second.sin_d)) /
                     hbar;
  if (!(std::abs(quad) > 0.0)) throw QuadratureError("composed phase has no quadratic term");
  const double a = std::abs(quad);
  const double centre = -lin / (2.0 * quad);

  auto integrand = [&](double y) {
    return kernel_between(s, rho, outer.x_end, outer.t_end, y, t_mid).value *
           kernel_between(s, rho, y, t_mid, outer.x_start, outer.t_start).value;
  };

  const auto levels = static_cast<std::size_t>(options.levels);
  std::vector<Complex> estimates(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    const double eps = options.damping_ratio * a / std::pow(2.0, static_cast<double>(k));
    // Aliasing error of the trapezoid rule for exp(-(eps - i a) y^2) is about
    // exp(-pi^2 eps / (h^2 (eps^2 + a^2))); keep it below exp(-60).
    const double h = kPi * std::sqrt(eps / (60.0 * (eps * eps + a * a)));
    const double half_width = std::sqrt(50.0 / eps);
    const auto n_half = static_cast<long>(std::ceil(half_width / h));
    Complex sum{};
    for (long j = -n_half; j <= n_half; ++j) {
      const double dy = static_cast<double>(j) * h;
      sum += integrand(centre + dy) * std::exp(-eps * dy * dy);
    }
    estimates[k] = sum * h;
  }

  // Richardson table in eps with ratio 2.
  std::vector<std::vector<Complex>> table(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    table[k].resize(k + 1);
    table[k][0] = estimates[k];
    for (std::size_t j = 1; j <= k; ++j) {
      const double f = std::pow(2.0, static_cast<double>(j)) - 1.0;
      table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / f;
    }
  }
  const Complex composed = table[levels - 1][levels - 1];
  const double change = std::abs(composed - table[levels - 2][levels - 2]);
  if (!(change <= options.tolerance * std::max(1.0, std::abs(composed)))) {
    throw QuadratureError(fmt::format(
        "semigroup extrapolation did not settle (last change {:.3g})", change));
  }
  return {std::abs(composed - direct), composed, direct, change};
}

}  // namespace tdho
