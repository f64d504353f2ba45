#pragma once

// Exact time-dependent eigenstates psi_n(x, t) of the oscillator, their
// momentum-space counterparts, and the position/momentum density pair.

#include <complex>
#include <cstddef>
#include <vector>

#include "tdho/ermakov.hpp"
#include "tdho/model.hpp"

namespace tdho {

using Complex = std::complex<double>;

// General eigenstate built from any rho solution:
//   exp(i alpha_n) (sqrt(hbar) rho)^(-1/2) phi_n(x / (sqrt(hbar) rho))
//     * exp(i m rho' x^2 / (2 hbar rho)),   alpha_n = -(n + 1/2) gamma(t).
Complex psi_general(int n, const Scenario& s, const RhoSolution& rho, double t, double x);

// Textbook stationary state times exp(-i (n + 1/2) omega0 t).
Complex psi_static(int n, const Scenario& s, double t, double x);

// Pulsating mass: exp(-i (n + 1/2) Omega t) (m(t) Omega / hbar)^(1/4) phi_n(xi)
//   * exp(i m(t) nu tan(nu t) x^2 / (2 hbar)),  xi = sqrt(m(t) Omega / hbar) x.
Complex psi_pulsating(int n, const Scenario& s, double t, double x);

// Inverse-square frequency: t^(-1/2) (m omega0 / hbar)^(1/4) phi_n(xi)
//   * exp(i (n + 1/2) omega0 / t) exp(i m x^2 / (2 hbar t)),
//   xi = sqrt(m omega0 / hbar) x / t.
Complex psi_inverse_square(int n, const Scenario& s, double t, double x);

// Dispatch on the scenario kind; Custom scenarios need rho.
Complex psi(int n, const Scenario& s, double t, double x, const RhoSolution* rho = nullptr);

struct WaveState {
  int n;
  double t;
  SpatialGrid grid;
  ScenarioKind scenario;
  std::vector<Complex> amplitudes;

  // Riemann sum of |psi|^2 on the grid.
  double norm() const;
};

WaveState sample_state(int n, const Scenario& s, double t, const SpatialGrid& grid,
                       const RhoSolution* rho = nullptr);

struct MomentumState {
  std::vector<double> p;  // ascending, spacing dp
  double dp;
  std::vector<Complex> amplitudes;
};

// Momentum grid conjugate to a spatial grid: p_k = 2 pi hbar k / (N dx),
// k = -N/2 .. N/2 - 1.
std::vector<double> momentum_grid(const SpatialGrid& grid, double hbar);

// psi~(p) = (2 pi hbar)^(-1/2) integral dx exp(-i p x / hbar) psi(x), by FFT.
// GridTooSmall when |psi|^2 (or |psi~|^2) has not decayed below 1e-12 of its
// peak at the grid edges.
MomentumState momentum_transform(const WaveState& w, double hbar);

struct GaussianVariances {
  double position;
  double momentum;
};

// Ground-state variances at time t (closed forms for the named cases, the
// rho-based form for Custom).
GaussianVariances ground_state_variances(const Scenario& s, double t,
                                         const RhoSolution* rho = nullptr);

// Closed-form ground-state densities |psi_0(x,t)|^2 and |psi~_0(p,t)|^2.
double ground_position_density(const Scenario& s, double t, double x);
double ground_momentum_density(const Scenario& s, double t, double p);

// Grid spanning +-10 sigma_x of state n, with enough points (>= 4096) for
// the momentum range to cover +-10 sigma_p as well.
SpatialGrid default_grid(const Scenario& s, int n, double t, const RhoSolution* rho = nullptr);

enum class DensityPath { Analytic, Numeric };
enum class DensityMode { Auto, Analytic, Numeric };

struct DensityPair {
  double t;
  std::vector<double> x;
  std::vector<double> density_x;
  double dx;
  std::vector<double> p;
  std::vector<double> density_p;
  double dp;
  DensityPath path;
};

// Auto picks the closed-form Gaussian pair for n = 0 on pulsating-mass and
// inverse-square scenarios, and |psi|^2 with the FFT otherwise.
DensityPair density_pair(int n, const Scenario& s, double t, const SpatialGrid& grid,
                         DensityMode mode = DensityMode::Auto, const RhoSolution* rho = nullptr);

}  // namespace tdho
