#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tdho/errors.hpp"
#include "tdho/propagator.hpp"
#include "tdho/series.hpp"

using namespace tdho;
using std::numbers::pi;

namespace {

RhoSolution rho_for(const Scenario& s, double t0, double t1) {
  return analytic_solution(s, TimeGrid(t0, t1, 64));
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("classical path") {
  const Scenario s = Scenario::static_oscillator(1.0, 1.0);
  const RhoSolution r = rho_for(s, 0.0, pi / 4);
  const BoundaryData b{0.0, 1.0, 0.0, pi / 4};
  CHECK(classical_path(s, r, b, 0.0) == 0.0);
  CHECK(classical_path(s, r, b, pi / 4) == 1.0);
  for (double t : {0.1, 0.3, 0.6}) {
    CHECK(classical_path(s, r, b, t) == doctest::Approx(std::sin(t) / std::sin(pi / 4)).epsilon(1e-13));
  }
  CHECK(classical_path(s, r, {0.0, 0.0, 0.0, pi / 4}, 0.4) == 0.0);

  // Euler-Lagrange equation d/dt(m x') + m w^2 x = 0 along a pulsating path.
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  // Dense nodes: the path is differentiated twice through the interpolant.
  const RhoSolution rp = analytic_solution(p, TimeGrid(0.1, 0.9, 4096));
  const BoundaryData bp{0.3, -0.7, 0.1, 0.9};
  const double h = 1e-3;
  for (double t : {0.25, 0.5, 0.75}) {
    auto x = [&](double tt) { return classical_path(p, rp, bp, tt); };
    auto mom = [&](double tt) { return mass_at(p, tt) * (x(tt + h) - x(tt - h)) / (2 * h); };
    const double lhs = (mom(t + h) - mom(t - h)) / (2 * h) + mass_at(p, t) * x(t);
    CHECK(std::abs(lhs) < 1e-5);
  }
}

TEST_CASE("classical action") {
  const Scenario s = Scenario::static_oscillator(1.0, 1.0);
  const RhoSolution r = rho_for(s, 0.0, pi / 4);
  CHECK(classical_action(s, r, {0.0, 1.0, 0.0, pi / 4}) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(classical_action(s, r, {0.0, 0.0, 0.0, pi / 4}) == 0.0);

  // Cross-check against the integral of the Lagrangian along the path.
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const RhoSolution rp = rho_for(p, 0.1, 0.9);
  const BoundaryData b{0.3, -0.7, 0.1, 0.9};
  const int n = 4000;
  const double dt = 0.8 / n;
  const double h = 1e-5;
  double integral = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = 0.1 + i * dt;
    const double x = classical_path(p, rp, b, t);
    const double v = (classical_path(p, rp, b, std::min(t + h, 0.9)) -
                      classical_path(p, rp, b, std::max(t - h, 0.1))) /
                     (std::min(t + h, 0.9) - std::max(t - h, 0.1));
    const double lag = 0.5 * mass_at(p, t) * (v * v - frequency_at(p, t) * frequency_at(p, t) * x * x);
    integral += (i == 0 || i == n ? 0.5 : 1.0) * lag * dt;
  }
  CHECK(classical_action(p, rp, b) == doctest::Approx(integral).epsilon(1e-6));
}

TEST_CASE("caustics are refused or flagged") {
  const Scenario s = Scenario::static_oscillator(1.0, 1.0);
  const RhoSolution r = rho_for(s, 0.0, 4.0);
  CHECK_THROWS_AS(kernel(s, r, {0.0, 1.0, 0.0, pi}), CausticError);
  CHECK_THROWS_AS(kernel(s, r, {0.0, 1.0, 0.0, 3.5}), CausticError);
  const KernelValue near = kernel(s, r, {0.0, 1.0, 0.0, pi - 5e-4});
  CHECK(near.near_caustic);
  CHECK(std::isfinite(std::abs(near.value)));
  CHECK(std::isfinite(classical_action(s, r, {0.0, 1.0, 0.0, pi - 5e-4})));
  CHECK_FALSE(kernel(s, r, {0.0, 1.0, 0.0, 1.0}).near_caustic);
  CHECK_THROWS_AS(kernel(s, r, {0.0, 1.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("kernel limits and explicit forms") {
  SUBCASE("static textbook kernel") {
    const Scenario s = Scenario::static_oscillator(1.3, 0.8, 0.7);
    const RhoSolution r = rho_for(s, 0.2, 3.0);
    for (double T : {0.3, 1.0, 2.5, 3.5}) {
      if (0.2 + T > 3.0) continue;
      const Complex k = kernel(s, r, {0.4, -0.9, 0.2, 0.2 + T}).value;
      CHECK(rel(k, oracle::static_kernel(1.3, 0.8, 0.7, -0.9, 0.4, T)) < 1e-9);
    }
  }
  SUBCASE("pulsating explicit form") {
    const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
    const BoundaryData b{0.2, -0.4, 0.1, 0.6};
    const Complex k = kernel(p, rho_for(p, 0.1, 0.6), b).value;
    CHECK(rel(k, kernel_pulsating(p, b).value) < 1e-9);
  }
  SUBCASE("inverse-square explicit form") {
    const Scenario q = Scenario::inverse_square_frequency(1.0, 1.0);
    const BoundaryData b{0.0, 1.0, 1.0, 2.0};
    const Complex k = kernel(q, rho_for(q, 1.0, 2.0), b).value;
    CHECK(rel(k, kernel_inverse_square(q, b).value) < 1e-9);
  }
}

TEST_CASE("kernel symmetry and Van Vleck determinant") {
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const RhoSolution r = rho_for(p, 0.1, 0.9);
  const BoundaryData b{0.3, -0.7, 0.1, 0.9};
  const Complex forward = kernel(p, r, b).value;
  CHECK(std::abs(adjoint_kernel(p, r, b).value - std::conj(forward)) < 1e-10);

  const double h = 1e-3;
  auto S = [&](double xs, double xe) { return classical_action(p, r, {xs, xe, 0.1, 0.9}); };
  const double mixed = (S(0.3 + h, -0.7 + h) - S(0.3 + h, -0.7 - h) - S(0.3 - h, -0.7 + h) +
                        S(0.3 - h, -0.7 - h)) /
                       (4 * h * h);
  const double f2 = std::norm(kernel_prefactor(p, r, b));
  CHECK(f2 == doctest::Approx(std::abs(mixed) / (2 * pi * p.hbar())).epsilon(1e-5));
}

TEST_CASE("spectral sum") {
  const Scenario s = Scenario::static_oscillator(1.0, 1.0);
  const RhoSolution r = rho_for(s, 0.0, pi / 4);
  const BoundaryData b{0.0, 0.0, 0.0, pi / 4};
  const Complex closed = kernel(s, r, b).value;
  CHECK(std::abs(spectral_kernel(s, b, 40).value - closed) < 1e-6);
  CHECK(spectral_kernel(s, b, 0, SpectralSummation::Truncated).value ==
        spectral_kernel(s, b, 1, SpectralSummation::Truncated).value);

  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const BoundaryData bp{0.1, 0.2, 0.1, 0.9};
  const Complex kp = kernel(p, rho_for(p, 0.1, 0.9), bp).value;
  double last = 1e300;
  for (int n_max : {8, 16, 32}) {
    const double err = rel(spectral_kernel(p, bp, n_max).value, kp);
    CHECK(err < last);
    last = err;
  }
  const auto sums = spectral_partial_sums(p, bp, 10);
  CHECK(sums.size() == 11);
}

TEST_CASE("Wynn epsilon accelerates a slowly converging series") {
  // Partial sums of ln 2 = 1 - 1/2 + 1/3 - ...
  std::vector<Complex> sums;
  double acc = 0.0;
  for (int k = 1; k <= 20; ++k) {
    acc += (k % 2 ? 1.0 : -1.0) / k;
    sums.emplace_back(acc, 0.0);
  }
  CHECK(std::abs(sums.back().real() - std::numbers::ln2) > 1e-2);
  CHECK(std::abs(wynn_epsilon(sums) - std::numbers::ln2) < 1e-12);
  const std::vector<Complex> two{1.0, 2.0};
  CHECK(wynn_epsilon(two) == Complex(2.0));
}

TEST_CASE("Mehler identity") {
  const MehlerCheck zero = mehler_check(0.7, -0.3, 0.0, 10);
  CHECK(zero.gap < 1e-15);
  CHECK(zero.rhs == doctest::Approx(std::exp(-(0.49 + 0.09) / 2)));
  const MehlerCheck origin = mehler_check(0.0, 0.0, 0.5, 40);
  CHECK(origin.gap < 1e-10);
  CHECK(origin.rhs == doctest::Approx(1.0 / std::sqrt(0.75)));
  CHECK(mehler_check(1.0, -1.0, 0.3, 40).gap < 1e-9);
  CHECK(mehler_check(1.0, -1.0, 0.3, 40).variant_gap > 1e-3);
  CHECK_THROWS_AS(mehler_check(0.0, 0.0, 1.0, 10), DomainError);
  CHECK(mehler_check(0.1, 0.1, 0.96, 20).divergence_warning);
  CHECK_FALSE(mehler_check(0.1, 0.1, 0.5, 20).divergence_warning);
}

TEST_CASE("semigroup property") {
  SUBCASE("static short intervals") {
    const Scenario s = Scenario::static_oscillator(1.0, 1.0);
    const RhoSolution r = rho_for(s, 0.0, 1.0);
    CHECK(semigroup_check(s, r, {0.2, -0.1, 0.0, 0.6}, 0.25).defect < 1e-4);
    CHECK(semigroup_check(s, r, {0.5, 0.5, 0.1, 1.0}, 0.7).defect < 1e-4);
  }
  SUBCASE("inverse square") {
    const Scenario q = Scenario::inverse_square_frequency(1.0, 1.0);
    const RhoSolution r = rho_for(q, 1.0, 2.0);
    CHECK(semigroup_check(q, r, {0.3, 0.8, 1.0, 2.0}, 1.5).defect < 1e-4);
  }
  SUBCASE("intermediate time approaching the start") {
    const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
    const RhoSolution r = rho_for(p, 0.1, 0.9);
    for (double d : {1e-1, 1e-2, 1e-3}) {
      CHECK(semigroup_check(p, r, {0.3, -0.2, 0.1, 0.9}, 0.1 + d).defect < 1e-4);
    }
  }
}
