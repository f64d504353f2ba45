#pragma once

#include <complex>
#include <span>

namespace tdho {

// Wynn's epsilon algorithm on a sequence of partial sums; returns the last
// element of the highest even column (a diagonal Pade value of the series).
// Repeated partial sums (vanishing terms) are dropped first. With fewer than
// three distinct sums the last partial sum is returned unchanged.
std::complex<double> wynn_epsilon(std::span<const std::complex<double>> partial_sums);

}  // namespace tdho
