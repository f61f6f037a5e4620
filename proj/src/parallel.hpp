#pragma once

#include <omp.h>

#include <exception>
#include <mutex>

namespace kmm::detail {

/// Worker count for an OpenMP region; non-positive means "all available".
inline int resolve_threads(int requested) {
  return requested > 0 ? requested : omp_get_max_threads();
}

/// Exceptions must not escape an OpenMP region. Work items run through
/// `run`; the first failure is rethrown after the region joins.
class ExceptionCollector {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!first_) first_ = std::current_exception();
    }
  }

  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr first_;
};

}  // namespace kmm::detail
