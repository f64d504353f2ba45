#pragma once

// Classical path, classical action and the exact Feynman kernel of the
// time-dependent oscillator, plus the numerical cross-checks used to
// validate them (eigenfunction sum, Mehler identity, semigroup property).

#include <complex>
#include <vector>

#include "tdho/ermakov.hpp"
#include "tdho/model.hpp"

namespace tdho {

using Complex = std::complex<double>;

// Kernel evaluation is refused when |sin(gamma'' - gamma')| < kCausticGuard.
inline constexpr double kCausticGuard = 1e-6;
// KernelValue::near_caustic is raised below this.
inline constexpr double kCausticWarning = 1e-3;

struct BoundaryData {
  double x_start;
  double x_end;
  double t_start;
  double t_end;
};

struct KernelValue {
  Complex value;
  bool near_caustic;
};

// Phase advance gamma(t_end) - gamma(t_start); CausticError unless it lies in
// the first caustic interval (0, pi) away from the guard.
double phase_advance(const Scenario& s, const RhoSolution& rho, const BoundaryData& b);

double classical_path(const Scenario& s, const RhoSolution& rho, const BoundaryData& b, double t);
double classical_action(const Scenario& s, const RhoSolution& rho, const BoundaryData& b);

// Van Vleck prefactor [1 / (2 pi i hbar rho' rho'' sin(dgamma))]^(1/2), principal branch.
Complex kernel_prefactor(const Scenario& s, const RhoSolution& rho, const BoundaryData& b);

// F exp(i S_cl / hbar).
KernelValue kernel(const Scenario& s, const RhoSolution& rho, const BoundaryData& b);

// Backward kernel K(x_start, t_start; x_end, t_end); equals conj(kernel(b)).
KernelValue adjoint_kernel(const Scenario& s, const RhoSolution& rho, const BoundaryData& b);

// Explicit closed forms for the two named cases, written in terms of the
// scenario parameters only (no rho solution involved).
KernelValue kernel_pulsating(const Scenario& s, const BoundaryData& b);
KernelValue kernel_inverse_square(const Scenario& s, const BoundaryData& b);

enum class SpectralSummation {
  Truncated,  // plain partial sum up to n_max
  Resummed,   // Wynn epsilon over the partial sums 0..n_max
};

// Partial sums of sum_n conj(psi_n(x', t')) psi_n(x'', t''), n = 0..n_max.
std::vector<Complex> spectral_partial_sums(const Scenario& s, const BoundaryData& b, int n_max,
                                           const RhoSolution* rho = nullptr);

KernelValue spectral_kernel(const Scenario& s, const BoundaryData& b, int n_max,
                            SpectralSummation summation = SpectralSummation::Resummed,
                            const RhoSolution* rho = nullptr);

struct MehlerCheck {
  double lhs;
  double rhs;
  double gap;
  // Same series with the weight (1/n!)(z/2)^2 in place of (z/2)^n / n!.
  double variant_lhs;
  double variant_gap;
  bool divergence_warning;  // |z| >= 0.95 with n_max < 48
};

// exp(-(u^2+v^2)/2) sum_{n<=n_max} (z/2)^n / n! H_n(u) H_n(v) against
// (1-z^2)^(-1/2) exp[(4uvz - (u^2+v^2)(1+z^2)) / (2(1-z^2))].
MehlerCheck mehler_check(double u, double v, double z, int n_max);

struct SemigroupOptions {
  int levels = 8;               // damping values eps_0 / 2^k, k < levels
  double damping_ratio = 0.5;   // eps_0 relative to the quadratic phase coefficient
  double tolerance = 1e-8;      // relative change of the last two Richardson diagonals
};

struct SemigroupResult {
  double defect;
  Complex composed;
  Complex direct;
  double extrapolation_change;
};

// |integral dy K(x'', t''; y, t_mid) K(y, t_mid; x', t') - K(x'', t''; x', t')|
// with a Gaussian convergence factor exp(-eps (y - y*)^2), Richardson
// extrapolated to eps -> 0. QuadratureError when the extrapolation does not settle.
SemigroupResult semigroup_check(const Scenario& s, const RhoSolution& rho,
                                const BoundaryData& outer, double t_mid,
                                const SemigroupOptions& options = {});

}  // namespace tdho
