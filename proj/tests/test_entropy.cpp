#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "tdho/entropy.hpp"
#include "tdho/errors.hpp"
#include "tdho/wavefunction.hpp"

using namespace tdho;
using std::numbers::e;
using std::numbers::pi;

namespace {

std::vector<double> sampled_gaussian(double variance, double half_width, std::size_t n, double& dx) {
  dx = 2.0 * half_width / static_cast<double>(n - 1);
  std::vector<double> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = oracle::gaussian(variance, -half_width + j * dx);
  return d;
}

const double kLnE2 = std::log(e / 2.0);

}  // namespace

TEST_CASE("differential entropy of reference densities") {
  double dx = 0.0;
  const double zero_var = 1.0 / (2.0 * pi * e);
  auto g0 = sampled_gaussian(zero_var, 12.0 * std::sqrt(zero_var), 4001, dx);
  CHECK(std::abs(differential_entropy(g0, dx)) < 1e-9);
  auto g1 = sampled_gaussian(1.0, 12.0, 4001, dx);
  CHECK(differential_entropy(g1, dx) == doctest::Approx(0.5 * std::log(2 * pi * e)).epsilon(1e-10));
  CHECK(0.5 * std::log(2 * pi * e) == doctest::Approx(1.4189385).epsilon(1e-7));

  const std::vector<double> uniform(2001, 0.5);
  CHECK(differential_entropy(uniform, 2.0 / 2000) == doctest::Approx(std::numbers::ln2).epsilon(1e-12));

  std::vector<double> bad = uniform;
  bad[3] = -0.1;
  CHECK_THROWS_AS(differential_entropy(bad, 2.0 / 2000), NormalizationError);
  CHECK_THROWS_AS(differential_entropy(uniform, 1.0 / 2000), NormalizationError);
}

TEST_CASE("Gaussian joint entropy") {
  CHECK(gaussian_joint_entropy(0.5, 0.5, 1.0) == doctest::Approx(kLnE2));
  CHECK(kLnE2 == doctest::Approx(0.3068528).epsilon(1e-7));
  CHECK(gaussian_joint_entropy(0.5, 1.0, 1.0) == doctest::Approx(0.6534264).epsilon(1e-7));
  CHECK(gaussian_joint_entropy(0.5 * 9.0, 1.0 / 9.0, 1.0) ==
        doctest::Approx(gaussian_joint_entropy(0.5, 1.0, 1.0)));
  CHECK(gaussian_joint_entropy(0.1, 0.1, 0.2) == doctest::Approx(kLnE2));
}

TEST_CASE("joint entropy from quadrature") {
  const Scenario st = Scenario::static_oscillator(1.0, 1.0);
  const EntropyRecord r0 = joint_entropy_numeric(0, st, 0.0, default_grid(st, 0, 0.0));
  CHECK(std::abs(r0.s_joint - kLnE2) < 1e-6);
  CHECK(std::abs(r0.s_joint - (r0.s_x + r0.s_p - std::log(2 * pi))) < 1e-14);
  CHECK(std::abs(leipnik_bound_margin(r0)) < 1e-6);
  CHECK(r0.method == EntropyMethod::Quadrature);

  const EntropyRecord r1 = joint_entropy_numeric(1, st, 0.0, default_grid(st, 1, 0.0));
  CHECK(leipnik_bound_margin(r1) > 1e-2);

  const Scenario inv = Scenario::inverse_square_frequency(1.0, 1.0);
  const EntropyRecord ri = joint_entropy_numeric(0, inv, 1.0, default_grid(inv, 0, 1.0));
  CHECK(std::abs(ri.s_joint - 0.6534264) < 1e-6);
  CHECK(std::abs(ri.bound_margin - 0.5 * std::log(2.0)) < 1e-6);
}

TEST_CASE("pulsating ground state at nu t = pi/4") {
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const double t = pi / 4;
  const EntropyRecord num = joint_entropy_numeric(0, p, t, default_grid(p, 0, t));
  // Variances with the time-dependent mass: hbar/(2 m(t) Omega) and
  // hbar m(t) (nu^2 tan^2 + Omega^2) / (2 Omega); product 3/8 here.
  const double expected = kLnE2 + 0.5 * std::log(1.5);
  CHECK(expected == doctest::Approx(0.5095854).epsilon(1e-7));
  CHECK(std::abs(num.s_joint - expected) < 1e-6);
  CHECK(std::abs(joint_entropy_gaussian(p, t).s_joint - expected) < 1e-12);
  // Holding the momentum width at the constant mass instead gives ln(e/2) + ln(3)/2,
  // which the quadrature rules out.
  const double constant_mass = gaussian_joint_entropy(1.0 / (2.0 * 0.5 * std::sqrt(2.0)),
                                                      (1.0 + 2.0) / (2.0 * std::sqrt(2.0)), 1.0);
  CHECK(constant_mass == doctest::Approx(0.8561585).epsilon(1e-6));
  CHECK(std::abs(num.s_joint - constant_mass) > 0.3);
}

TEST_CASE("quadrature agrees with Gaussian variances along sweeps") {
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 0.7);
  const Scenario inv = Scenario::inverse_square_frequency(1.0, 0.5);
  for (double t = 0.0; t < 2.0; t += 0.1) {
    const EntropyRecord r = joint_entropy_numeric(0, p, t, default_grid(p, 0, t));
    CHECK(std::abs(r.s_joint - joint_entropy_gaussian(p, t).s_joint) < 1e-6);
  }
  for (double t = 0.2; t < 5.0; t += 0.4) {
    const EntropyRecord r = joint_entropy_numeric(0, inv, t, default_grid(inv, 0, t));
    CHECK(std::abs(r.s_joint - joint_entropy_closed_inverse_square(0.5, t)) < 1e-6);
  }
}

TEST_CASE("grid refinement changes little") {
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const SpatialGrid g = default_grid(p, 0, 0.8);
  const SpatialGrid fine(g.x_min(), g.x_max(), 2 * g.size());
  const double a = joint_entropy_numeric(0, p, 0.8, g).s_joint;
  const double b = joint_entropy_numeric(0, p, 0.8, fine).s_joint;
  CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("inverse-square closed form") {
  CHECK(joint_entropy_closed_inverse_square(1.0, 1e-9) == doctest::Approx(kLnE2));
  CHECK(joint_entropy_closed_inverse_square(1.0, 1.0) == doctest::Approx(0.6534264).epsilon(1e-7));
  CHECK(joint_entropy_closed_inverse_square(2.0, 2.0) ==
        doctest::Approx(joint_entropy_closed_inverse_square(1.0, 1.0)).epsilon(1e-15));
  double prev = -1.0;
  for (double t = 0.2; t <= 5.0; t += 0.1) {
    const double v = joint_entropy_closed_inverse_square(1.0, t);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("pulsating reference form is carried, not trusted") {
  const Scenario p = Scenario::pulsating_mass(1.0, 1.0, 1.0);
  const double ref0 = joint_entropy_pulsating_reference(p, 0.0);
  const double num0 = joint_entropy_numeric(0, p, 0.0, default_grid(p, 0, 0.0)).s_joint;
  CHECK(std::abs(ref0 - num0) > 1e-2);
  for (double t : {0.0, 0.3, 1.2, 1.5}) {
    CHECK(std::isfinite(joint_entropy_pulsating_reference(p, t)));
    CHECK(joint_entropy_pulsating_reference(p, t + pi) ==
          doctest::Approx(joint_entropy_pulsating_reference(p, t)).epsilon(1e-9));
  }
  CHECK(closed_form_entropy(0, p, 0.3) == joint_entropy_pulsating_reference(p, 0.3));
  CHECK(closed_form_entropy(1, p, 0.3) == std::nullopt);
  CHECK(*closed_form_entropy(0, Scenario::static_oscillator(1, 1), 2.0) == doctest::Approx(kLnE2));
}

TEST_CASE("bound margin") {
  EntropyRecord r{0.0, 0.0, 0.0, kLnE2 - 1e-3, std::nullopt, 0.0, EntropyMethod::Quadrature};
  CHECK_THROWS_AS(leipnik_bound_margin(r), BoundViolation);
  r.s_joint = kLnE2 - 5e-7;
  CHECK(leipnik_bound_margin(r) == doctest::Approx(-5e-7));
  const Scenario inv = Scenario::inverse_square_frequency(1.0, 2.0);
  for (double t : {0.5, 1.5, 3.0}) {
    const EntropyRecord ri = joint_entropy_numeric(0, inv, t, default_grid(inv, 0, t));
    CHECK(ri.bound_margin == doctest::Approx(0.5 * std::log1p(t * t / 4.0)).epsilon(1e-5));
    CHECK(ri.bound_margin > 0.0);
  }
}
