#pragma once

#include <cstddef>

#include "kmm/bool_matrix.hpp"
#include "kmm/report.hpp"
#include "kmm/symbols.hpp"

namespace kmm::lb {

/// k-mismatch instance encoding the boolean product of A (M' x N) and
/// B (N x M), M' >= M >= N >= 1.
///
///   T = #^{M^2} r_1 #^{M-N+1} r_2 ... r_{M'} #^{M^2}
///   P = c_1 #^{M-N} c_2 ... c_M
///
/// r_{i,j} = j when A[i][j] = 1 else zero_text; c_{i,j} = i when B[i][j] = 1
/// else zero_pattern. Row blocks advance by M + 1 and column blocks by M, so
/// each alignment lines up at most one (row, column) pair.
struct LbInstance {
  SymbolString text;
  SymbolString pattern;
  std::size_t rows = 0;   // M'
  std::size_t inner = 0;  // N
  std::size_t cols = 0;   // M
  Symbol pad = 0;
  Symbol zero_text = 0;
  Symbol zero_pattern = 0;

  /// Alignment at which column block j of P sits on row block i of T.
  std::size_t alignment(std::size_t i, std::size_t j) const noexcept;
  /// Number of (row, column) block pairs lined up at `alpha`.
  std::size_t aligned_pairs(std::size_t alpha) const noexcept;
  /// Mismatches at `alpha` when both matrices are all zeros: |P| minus the
  /// pad-on-pad positions, which depend only on the block geometry.
  std::size_t baseline(std::size_t alpha) const;
  std::size_t mismatch_bound() const noexcept { return 2 * inner * cols; }
};

/// Throws std::invalid_argument unless M' >= M >= N >= 1 and inner
/// dimensions agree.
LbInstance encode(const BoolMatrix& a, const BoolMatrix& b);

/// Entry (i, j) is 1 iff the distance at alignment(i, j) is below its
/// baseline. Throws if a needed alignment is missing from the report.
BoolMatrix decode(const LbInstance& inst, const DistanceReport& distances);

}  // namespace kmm::lb
