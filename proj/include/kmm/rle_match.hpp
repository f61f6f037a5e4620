#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kmm/kernel.hpp"
#include "kmm/report.hpp"
#include "kmm/symbols.hpp"

namespace kmm {

/// Non-sentinel letters of P*: heavy when they form more than t runs.
struct LetterClasses {
  std::vector<Symbol> heavy;
  std::vector<Symbol> light;
};

LetterClasses classify_letters(const RleView& p_star, std::size_t t);

/// Second difference D^2 A of the light-letter match array A, where A[d]
/// counts matches at alignment d (text position d + j against pattern j).
/// Stored over offsets [-|P| - 2, |T| + 2]; a matching pair of runs adds a
/// piecewise-linear histogram to A, i.e. four unit entries to D^2 A.
class DerivativeAccumulator {
 public:
  DerivativeAccumulator(std::size_t text_length, std::size_t pattern_length);

  /// Text run [u, v] against pattern run [y, z] of the same symbol:
  /// +1 at u - z, -1 at v - z + 1, -1 at u - y + 1, +1 at v - y + 2.
  void apply_run_pair(const Run& text_run, const Run& pattern_run);

  std::int64_t at(std::ptrdiff_t offset) const;
  std::ptrdiff_t lowest_offset() const noexcept { return lowest_; }
  std::ptrdiff_t highest_offset() const noexcept {
    return lowest_ + static_cast<std::ptrdiff_t>(d2_.size()) - 1;
  }
  /// Sum of all entries; zero after any sequence of updates.
  std::int64_t total() const noexcept;
  std::size_t updates() const noexcept { return updates_; }

  /// A over [lo, hi] by two prefix sums from the zero left boundary.
  std::vector<std::int64_t> counts_over(std::ptrdiff_t lo, std::ptrdiff_t hi) const;
  /// A over the valid alignments [0, |T| - |P|].
  std::vector<std::int64_t> recover_counts() const;

 private:
  std::size_t text_length_;
  std::size_t pattern_length_;
  std::ptrdiff_t lowest_;
  std::vector<std::int64_t> d2_;
  std::size_t updates_ = 0;
};

/// A[i] = D2[i] + 2 A[i-1] - A[i-2] for i >= 2, seeded with A[0], A[1].
std::vector<std::int64_t> integrate_second_difference(std::span<const std::int64_t> d2,
                                                      std::int64_t a0, std::int64_t a1);

struct StarStats {
  std::size_t heavy_letters = 0;
  std::size_t light_letters = 0;
  std::size_t run_pairs = 0;
};

/// Exact Ham(T*[d..d+|P*|-1], P*) for every d in [0, |T*| - |P*|]: |P*| minus
/// heavy matches (one correlation per heavy letter) minus light matches
/// (run-pair accumulation).
std::vector<std::size_t> star_distances(const KernelInstance& inst, std::size_t t,
                                        StarStats* stats = nullptr, int threads = 0);

/// Distances of P in T' for alignments 0 .. |T'| - |P|, translated from the
/// rearranged pair. `t` = 0 selects default_threshold(|P|).
DistanceReport kernel_distances(const KernelInstance& inst, std::size_t k, std::size_t t = 0,
                                StarStats* stats = nullptr, int threads = 0);

}  // namespace kmm
