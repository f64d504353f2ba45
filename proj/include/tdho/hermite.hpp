#pragma once

#include <vector>

namespace tdho {

inline constexpr int kMaxQuantumNumber = 64;

// Physicists' Hermite polynomial by the three-term recurrence. Documented
// range 0 <= n <= 64, |u| <= 40; OverflowError outside it.
double hermite(int n, double u);

// Normalized Hermite function phi_n(u) = H_n(u) exp(-u^2/2) / sqrt(2^n n! sqrt(pi)),
// computed by its own recurrence so no factorial or 2^n is ever formed.
double hermite_function(int n, double u);

// phi_0(u) .. phi_{n_max}(u).
std::vector<double> hermite_functions(int n_max, double u);

}  // namespace tdho
