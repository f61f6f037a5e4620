#pragma once

#include <cstdint>
#include <optional>

#include "kmm/lce.hpp"
#include "kmm/symbols.hpp"

namespace kmm {

/// Outcome of branch detection. `period` is set only for an exactly verified
/// shift ell <= k whose overlay distance is at most 4k.
struct PeriodVerdict {
  std::optional<std::size_t> period;
  std::size_t verified_distance = 0;
  std::size_t candidates_checked = 0;

  bool small() const noexcept { return period.has_value(); }
};

/// Estimates the self-overlay distance of every shift in [1, k]; shifts whose
/// estimate is at most 6k are verified in increasing order with kangaroo
/// jumps (cap 4k), and the first success wins. `lce` must index `pattern`.
PeriodVerdict detect_period(SymbolView pattern, std::size_t k, std::size_t repetitions,
                            std::uint64_t seed, const LceIndex& lce, int threads = 0);

/// T' as a sub-range [offset, offset + length) of the window.
struct TrimResult {
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// Bound on runs_ell of any window part covered by an occurrence with at most
/// k mismatches: ell classes, plus the pattern's unequal ell-pairs, plus two
/// pairs per mismatch.
std::size_t trim_runs_limit(std::size_t k, std::size_t ell, std::size_t verified_distance);

/// T' = T_L T_R, where T_L is the longest suffix of window[0, m) and T_R the
/// longest prefix of window[m, ..) whose runs_ell stay within `runs_limit`.
/// Runs are counted incrementally per residue class.
TrimResult trim_text(SymbolView window, std::size_t pattern_length, std::size_t ell,
                     std::size_t runs_limit);

/// The rearranged pair (T*, P*).
///
/// T' is padded with '#' and P with '$' to multiples of ell (m1 ell and
/// m2 ell). T* is the ell-encoding of padded T' followed by the ell-encoding
/// of T'[ell..] #^ell, so |T*| = 2 m1 ell; P* is the ell-encoding of padded
/// P extended by $^{(m1 - m2) ell}, so |P*| = m1 ell.
struct KernelInstance {
  SymbolString t_star;
  SymbolString p_star;
  std::size_t ell = 1;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t t_prime_length = 0;  // before any padding
  std::size_t pattern_length = 0;
  std::size_t t_prime_offset = 0;  // start of T' in its window

  std::size_t pattern_padding() const noexcept { return m2 * ell - pattern_length; }
  /// Largest alignment alpha covered by the rearrangement.
  std::size_t max_alignment() const noexcept { return (m1 - m2) * ell; }
  std::size_t budget_star(std::size_t k) const noexcept { return k + (m1 - m2) * ell; }
};

/// Throws std::invalid_argument if the padded pattern is longer than the
/// padded text, or ell is zero.
KernelInstance rearrange(SymbolView t_prime, SymbolView pattern, std::size_t ell);

/// rearrange() after extending T' by pattern_padding() '#' symbols, so that
/// every alignment 0 .. |T'| - |P| of the unpadded strings is covered.
KernelInstance build_kernel(SymbolView t_prime, SymbolView pattern, std::size_t ell);

/// beta = floor(alpha / ell) + (alpha mod ell) * m1.
std::size_t map_alignment(const KernelInstance& inst, std::size_t alpha);

}  // namespace kmm
