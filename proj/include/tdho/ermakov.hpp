#pragma once

// Auxiliary amplitude rho(t) of the time-dependent oscillator:
//
//   rho'' + (m'/m) rho' + omega^2 rho = 1 / (m^2 rho^3),
//
// together with the accumulated phase gamma(t) = integral of 1/(m rho^2).

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "tdho/model.hpp"

namespace tdho {

enum class RhoSource { Analytic, Numeric };

inline constexpr double kRhoFloor = 1e-12;

struct RhoValue {
  double rho;
  double rho_dot;
};

struct RhoPoint {
  double rho;
  double rho_dot;
  double gamma;
};

// Samples of rho, rho', gamma on a time grid. The second derivative of rho and
// the phase rate are stored too, so that at() can use cubic Hermite
// interpolation of all three quantities between nodes.
class RhoSolution {
 public:
  RhoSolution(std::vector<double> times, std::vector<double> rho, std::vector<double> rho_dot,
              std::vector<double> rho_ddot, std::vector<double> gamma,
              std::vector<double> gamma_rate, RhoSource source);

  std::size_t size() const { return times_.size(); }
  RhoSource source() const { return source_; }

  std::span<const double> times() const { return times_; }
  std::span<const double> rho() const { return rho_; }
  std::span<const double> rho_dot() const { return rho_dot_; }
  std::span<const double> gamma() const { return gamma_; }

  double t_front() const { return times_.front(); }
  double t_back() const { return times_.back(); }
  bool covers(double t) const { return t >= t_front() && t <= t_back(); }

  // DomainError outside [t_front, t_back]; exact at the nodes.
  RhoPoint at(double t) const;

 private:
  std::vector<double> times_;
  std::vector<double> rho_;
  std::vector<double> rho_dot_;
  std::vector<double> rho_ddot_;
  std::vector<double> gamma_;
  std::vector<double> gamma_rate_;
  RhoSource source_;
};

// Classic RK4 on the grid; gamma starts at 0 at grid.t_start().
RhoSolution solve_ermakov(const Scenario& s, double rho_init, double rho_dot_init,
                          const TimeGrid& grid);

// Closed-form rho for Static, PulsatingMass and InverseSquareFrequency.
RhoValue analytic_rho(const Scenario& s, double t);
// Matching closed-form phase: omega0 t, Omega t, and -omega0/t respectively.
double analytic_gamma(const Scenario& s, double t);
RhoSolution analytic_solution(const Scenario& s, const TimeGrid& grid);

// Integral of 1/(m rho^2) over [t1, t2].
double phase_gamma(const Scenario& s, double t1, double t2, const RhoSolution& rho);

// Max over interior nodes of the Ermakov residual with rho' and rho'' taken
// from second-order central differences of the rho samples.
double ermakov_residual(const Scenario& s, const RhoSolution& rho);

// Columns: t, rho, rho_dot, gamma.
void write_csv(std::ostream& out, const RhoSolution& rho);

}  // namespace tdho
