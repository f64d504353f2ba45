#include "tdho/hermite.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tdho/errors.hpp"

namespace tdho {

namespace {

void require_order(int n) {
  if (n < 0) throw DomainError(fmt::format("Hermite order must be non-negative, got {}", n));
  if (n > kMaxQuantumNumber) {
    throw OverflowError(fmt::format("Hermite order {} exceeds {}", n, kMaxQuantumNumber));
  }
}

}  // namespace

double hermite(int n, double u) {
  require_order(n);
  if (std::abs(u) > 40.0) throw OverflowError(fmt::format("|u| = {} exceeds 40", std::abs(u)));
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * u;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * u * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> hermite_functions(int n_max, double u) {
  require_order(n_max);
  std::vector<double> phi(static_cast<std::size_t>(n_max) + 1);
  phi[0] = std::exp(-0.5 * u * u) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n_max >= 1) phi[1] = std::numbers::sqrt2 * u * phi[0];
  for (int k = 1; k < n_max; ++k) {
    phi[k + 1] = std::sqrt(2.0 / (k + 1)) * u * phi[k] - std::sqrt(double(k) / (k + 1)) * phi[k - 1];
  }
  return phi;
}

double hermite_function(int n, double u) { return hermite_functions(n, u).back(); }

}  // namespace tdho
