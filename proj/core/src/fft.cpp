#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace emg::detail {
namespace {

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

class Plan {
 public:
  explicit Plan(std::size_t n) : n_(n) {
    FftwBuffer<double> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
    FftwBuffer<fftw_complex> out(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1))));
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
  }
  ~Plan() { fftw_destroy_plan(plan_); }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  // fftw_execute_dft_r2c is safe to call concurrently on one plan as long
  // as the arrays are distinct and share the planning alignment.
  std::vector<double> run(std::span<const double> x) const {
    FftwBuffer<double> in(static_cast<double*>(fftw_malloc(sizeof(double) * n_)));
    FftwBuffer<fftw_complex> out(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n_ / 2 + 1))));
    std::copy(x.begin(), x.end(), in.get());
    fftw_execute_dft_r2c(plan_, in.get(), out.get());
    std::vector<double> power(n_ / 2 + 1);
    for (std::size_t k = 0; k < power.size(); ++k) {
      power[k] = out[k][0] * out[k][0] + out[k][1] * out[k][1];
    }
    return power;
  }

 private:
  std::size_t n_;
  fftw_plan plan_;
};

const Plan& plan_for(std::size_t n) {
  // FFTW's planner is not reentrant.
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<Plan>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Plan>(n);
  return *slot;
}

}  // namespace

std::vector<double> rfft_power(std::span<const double> x) {
  if (x.empty()) return {};
  return plan_for(x.size()).run(x);
}

}  // namespace emg::detail
