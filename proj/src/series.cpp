#include "tdho/series.hpp"

#include <cmath>
#include <vector>

namespace tdho {

std::complex<double> wynn_epsilon(std::span<const std::complex<double>> partial_sums) {
  using C = std::complex<double>;
  if (partial_sums.empty()) return C{};

  std::vector<C> s;
  s.reserve(partial_sums.size());
  for (const C& v : partial_sums) {
    if (!s.empty() && std::abs(v - s.back()) <= 1e-15 * std::abs(v)) continue;
    s.push_back(v);
  }
  if (s.size() < 3) return partial_sums.back();

  std::vector<C> prev(s.size() + 1, C{});  // column k-1
  std::vector<C> cur = s;                   // column k
  C best = s.back();
  for (std::size_t k = 1; cur.size() > 1; ++k) {
    std::vector<C> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const C d = cur[i + 1] - cur[i];
      if (d == C{}) return (k % 2 == 1) ? cur[i + 1] : best;
      next[i] = prev[i + 1] + 1.0 / d;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) {
      if (!std::isfinite(cur.back().real()) || !std::isfinite(cur.back().imag())) return best;
      best = cur.back();
    }
  }
  return best;
}

}  // namespace tdho
