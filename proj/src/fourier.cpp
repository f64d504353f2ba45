#include "tdho/fourier.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include <fftw3.h>

namespace tdho {

namespace {

// The FFTW planner is not reentrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

struct PlanDestroy {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};

}  // namespace

std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> in) {
  const int n = static_cast<int>(in.size());
  std::vector<std::complex<double>> out(in.size());
  if (n == 0) return out;

  std::unique_ptr<fftw_complex, FftwFree> buf_in(fftw_alloc_complex(in.size()));
  std::unique_ptr<fftw_complex, FftwFree> buf_out(fftw_alloc_complex(in.size()));
  std::unique_ptr<fftw_plan_s, PlanDestroy> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_1d(n, buf_in.get(), buf_out.get(), FFTW_FORWARD, FFTW_ESTIMATE));
  }
  std::copy(in.begin(), in.end(), reinterpret_cast<std::complex<double>*>(buf_in.get()));
  fftw_execute(plan.get());
  const auto* res = reinterpret_cast<const std::complex<double>*>(buf_out.get());
  std::copy(res, res + n, out.begin());
  return out;
}

}  // namespace tdho
