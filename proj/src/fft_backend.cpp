#include "fft_backend.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <new>

namespace kmm::detail {

void FftwDeleter::operator()(void* p) const noexcept { fftw_free(p); }

FftwBuffer<double> make_real_buffer(std::size_t n) {
  auto* p = static_cast<double*>(fftw_malloc(sizeof(double) * (n ? n : 1)));
  if (!p) throw std::bad_alloc();
  return FftwBuffer<double>(p);
}

FftwBuffer<std::complex<double>> make_complex_buffer(std::size_t n) {
  auto* p = static_cast<std::complex<double>*>(
      fftw_malloc(sizeof(std::complex<double>) * (n ? n : 1)));
  if (!p) throw std::bad_alloc();
  return FftwBuffer<std::complex<double>>(p);
}

std::size_t smooth_size(std::size_t n) {
  if (n <= 1) return 1;
  for (std::size_t c = n;; ++c) {
    std::size_t r = c;
    for (std::size_t f : {2, 3, 5, 7}) {
      while (r % f == 0) r /= f;
    }
    if (r == 1) return c;
  }
}

namespace {
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  auto in = make_real_buffer(n);
  auto out = make_complex_buffer(n / 2 + 1);
  const int size = static_cast<int>(n);
  auto* spec = reinterpret_cast<fftw_complex*>(out.get());
  forward_plan_ = fftw_plan_dft_r2c_1d(size, in.get(), spec, FFTW_ESTIMATE);
  backward_plan_ = fftw_plan_dft_c2r_1d(size, spec, in.get(), FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

const RealFft& RealFft::of_size(std::size_t n) {
  // The mutex must outlive the cache, whose destructors take it.
  auto& mu = planner_mutex();
  static std::map<std::size_t, std::unique_ptr<RealFft>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot.reset(new RealFft(n));
  return *slot;
}

void RealFft::forward(double* in, std::complex<double>* out) const {
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), in,
                       reinterpret_cast<fftw_complex*>(out));
}

void RealFft::backward(std::complex<double>* in, double* out) const {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(backward_plan_),
                       reinterpret_cast<fftw_complex*>(in), out);
}

}  // namespace kmm::detail
