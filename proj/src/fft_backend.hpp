#pragma once

// Thin RAII layer over FFTW real-to-complex transforms. Plans are created
// once per size under a lock and executed with the thread-safe new-array
// interface, so each caller owns its buffers.

#include <complex>
#include <cstddef>
#include <memory>

namespace kmm::detail {

struct FftwDeleter {
  void operator()(void* p) const noexcept;
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwDeleter>;

FftwBuffer<double> make_real_buffer(std::size_t n);
FftwBuffer<std::complex<double>> make_complex_buffer(std::size_t n);

/// Smallest 2^a 3^b 5^c 7^d >= n.
std::size_t smooth_size(std::size_t n);

/// Unnormalized forward/backward real transform of a fixed size. The
/// spectrum holds size/2 + 1 bins. Buffers must come from make_*_buffer.
class RealFft {
 public:
  static const RealFft& of_size(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t bins() const noexcept { return n_ / 2 + 1; }

  void forward(double* in, std::complex<double>* out) const;
  /// Destroys the contents of `in`.
  void backward(std::complex<double>* in, double* out) const;

  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;
  ~RealFft();

 private:
  explicit RealFft(std::size_t n);
  std::size_t n_;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

}  // namespace kmm::detail
