#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace lpq::detail {

namespace {
// FFTW planning is not thread-safe; execution of independent plans is.
std::mutex planner_mutex;
}  // namespace

void fft(std::vector<std::complex<double>>& data, int dim, int n_per_axis, bool inverse) {
  const std::size_t expected = (dim == 1) ? static_cast<std::size_t>(n_per_axis)
                                          : static_cast<std::size_t>(n_per_axis) *
                                                static_cast<std::size_t>(n_per_axis);
  if (dim != 1 && dim != 2) throw std::invalid_argument("fft: dim must be 1 or 2");
  if (data.size() != expected) throw std::invalid_argument("fft: data size does not match grid");

  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = nullptr;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    if (dim == 1) {
      plan = fftw_plan_dft_1d(n_per_axis, raw, raw, inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                              FFTW_ESTIMATE);
    } else {
      plan = fftw_plan_dft_2d(n_per_axis, n_per_axis, raw, raw,
                              inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
    }
  }
  if (plan == nullptr) throw std::runtime_error("fft: fftw plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(expected);
    for (auto& z : data) z *= scale;
  }
}

}  // namespace lpq::detail
