#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "tdho/ermakov.hpp"
#include "tdho/errors.hpp"

using namespace tdho;

namespace {

// RHS of the Ermakov equation evaluated independently of the library.
double pulsating_rho(double t) { return 1.0 / (std::sqrt(std::sqrt(2.0)) * std::cos(t)); }

RhoSolution shifted(const RhoSolution& r, double offset) {
  std::vector<double> t(r.times().begin(), r.times().end());
  std::vector<double> rho(r.rho().begin(), r.rho().end());
  for (double& v : rho) v += offset;
  std::vector<double> zero(t.size(), 0.0);
  std::vector<double> rd(r.rho_dot().begin(), r.rho_dot().end());
  std::vector<double> g(r.gamma().begin(), r.gamma().end());
  return RhoSolution(t, rho, rd, zero, g, zero, RhoSource::Numeric);
}

}  // namespace

TEST_CASE("static constant solution") {
  const Scenario s = Scenario::static_oscillator(1.0, 1.0);
  const RhoSolution r = solve_ermakov(s, 1.0, 0.0, TimeGrid(0.0, 10.0, 1000));
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(r.rho()[i] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.gamma()[i] == doctest::Approx(r.times()[i]).epsilon(1e-12));
  }
  CHECK(ermakov_residual(s, r) < 1e-10);
}

TEST_CASE("inverse square numeric solution is linear in t") {
  const Scenario s = Scenario::inverse_square_frequency(1.0, 1.0);
  const RhoSolution r = solve_ermakov(s, 1.0, 1.0, TimeGrid(1.0, 5.0, 8192));
  double worst = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) worst = std::max(worst, std::abs(r.rho()[i] - r.times()[i]));
  CHECK(worst < 1e-8);
  // gamma(t) - gamma(1) = omega0 (1 - 1/t)
  CHECK(r.gamma().back() == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("pulsating numeric solution tracks the closed form") {
  const Scenario s = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const RhoValue init = analytic_rho(s, 0.0);
  const RhoSolution r = solve_ermakov(s, init.rho, init.rho_dot, TimeGrid(0.0, 1.2, 4096));
  double worst = 0.0;
  double worst_gamma = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double t = r.times()[i];
    worst = std::max(worst, std::abs(r.rho()[i] - pulsating_rho(t)));
    worst_gamma = std::max(worst_gamma, std::abs(r.gamma()[i] - std::sqrt(2.0) * t));
  }
  CHECK(worst < 1e-6);
  CHECK(worst_gamma < 1e-8);
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r.gamma()[i] > r.gamma()[i - 1]);
}

TEST_CASE("analytic rho values") {
  CHECK(analytic_rho(Scenario::inverse_square_frequency(1.0, 1.0), 2.0).rho == doctest::Approx(2.0));
  CHECK(analytic_rho(Scenario::static_oscillator(1.0, 4.0), 3.0).rho == doctest::Approx(0.5));
  const RhoValue p = analytic_rho(Scenario::pulsating_mass(1.0, 1.0, 1.0), 0.0);
  CHECK(p.rho == doctest::Approx(0.840896415253715).epsilon(1e-14));
  CHECK(p.rho_dot == doctest::Approx(0.0));
  CHECK_THROWS_AS(analytic_rho(Scenario::pulsating_mass(1.0, 1.0, 1.0), std::numbers::pi / 2),
                  SingularityError);
}

TEST_CASE("phase integral") {
  const Scenario inv = Scenario::inverse_square_frequency(1.0, 2.0);
  const RhoSolution r = analytic_solution(inv, TimeGrid(1.0, 4.0, 300));
  CHECK(phase_gamma(inv, 1.0, 4.0, r) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(phase_gamma(inv, 2.0, 2.0, r) == 0.0);
  CHECK_THROWS_AS(phase_gamma(inv, 3.0, 2.0, r), DomainError);
  CHECK_THROWS_AS(phase_gamma(inv, 0.5, 2.0, r), DomainError);

  // Cumulative quadrature by the numeric solver agrees with the closed form.
  const RhoSolution n = solve_ermakov(inv, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0),
                                      TimeGrid(1.0, 4.0, 6000));
  CHECK(std::abs(phase_gamma(inv, 1.0, 4.0, n) - 1.5) < 1e-8);

  const Scenario st = Scenario::static_oscillator(1.0, 1.0);
  const RhoSolution rs = analytic_solution(st, TimeGrid(0.0, 7.0, 70));
  CHECK(phase_gamma(st, 0.0, 7.0, rs) == doctest::Approx(7.0));

  // Additivity on the numeric pulsating solution, including off-node times.
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const RhoValue init = analytic_rho(p, 0.0);
  const RhoSolution rp = solve_ermakov(p, init.rho, init.rho_dot, TimeGrid(0.0, 1.2, 2000));
  const double whole = phase_gamma(p, 0.1, 1.1, rp);
  const double parts = phase_gamma(p, 0.1, 0.55321, rp) + phase_gamma(p, 0.55321, 1.1, rp);
  CHECK(std::abs(whole - parts) < 1e-10);
}

TEST_CASE("residual converges at second order and detects wrong solutions") {
  const Scenario inv = Scenario::inverse_square_frequency(1.0, 1.0);
  CHECK(ermakov_residual(inv, analytic_solution(inv, TimeGrid(1.0, 5.0, 2047))) < 1e-6);

  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const double coarse = ermakov_residual(p, analytic_solution(p, TimeGrid(0.0, 1.0, 1024)));
  const double fine = ermakov_residual(p, analytic_solution(p, TimeGrid(0.0, 1.0, 2048)));
  CHECK(fine < 1e-6);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.1));

  const RhoSolution good = analytic_solution(inv, TimeGrid(1.0, 5.0, 2047));
  CHECK(ermakov_residual(inv, shifted(good, 0.1)) > 1e-2);
}

TEST_CASE("solver refuses singular mass and collapsing rho") {
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  CHECK_THROWS_AS(solve_ermakov(p, 1.0, 0.0, TimeGrid(0.0, 2.0, 100)), SingularityError);
  const Scenario st = Scenario::static_oscillator(1.0, 1.0);
  CHECK_THROWS(solve_ermakov(st, 0.0, 0.0, TimeGrid(0.0, 1.0, 10)));
}

TEST_CASE("interpolation is exact at nodes and bounded outside") {
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const RhoSolution r = analytic_solution(p, TimeGrid(0.0, 1.0, 64));
  CHECK(r.at(r.times()[10]).rho == r.rho()[10]);
  CHECK(r.at(0.3217).rho == doctest::Approx(pulsating_rho(0.3217)).epsilon(1e-8));
  CHECK_THROWS_AS(r.at(1.01), DomainError);
  std::ostringstream out;
  write_csv(out, r);
  CHECK(out.str().rfind("t,rho,rho_dot,gamma\n", 0) == 0);
}
