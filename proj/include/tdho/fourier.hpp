#pragma once

#include <complex>
#include <span>
#include <vector>

namespace tdho {

// out[k] = sum_j in[j] exp(-2 pi i j k / N). Thread-safe.
std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> in);

}  // namespace tdho
