#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "kmm/report.hpp"
#include "kmm/symbols.hpp"

namespace kmm {

enum class Algorithm { Auto, Brute, LandauVishkin, Abrahamson, Paper };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

struct MatchConfig {
  std::size_t k = 0;
  std::size_t repetitions = 0;  // 0: default_repetitions(m)
  std::uint64_t seed = 0;
  std::size_t threshold = 0;  // heavy/light split; 0: default_threshold(m)
  Algorithm algorithm = Algorithm::Auto;
  double filter_multiplier = 3.0;  // keep alignments with estimate <= multiplier * k
  int threads = 0;                 // 0: all available
};

struct MatchStats {
  bool small_period = false;
  std::size_t period = 0;
  std::size_t windows = 0;
  std::size_t kernel_windows = 0;   // windows whose T' admitted an alignment
  std::size_t filtered_candidates = 0;
  std::size_t run_pairs = 0;
  bool downgraded = false;  // k >= m, answered by exact counting
};

/// Seed of window `index`, derived from the master seed.
std::uint64_t window_seed(std::uint64_t seed, std::size_t index);

/// k-mismatch matching over the whole text. The text is cut into windows of
/// length 2m starting at multiples of m; each alignment is answered by the
/// window in whose first m offsets it lies. Requires 0 < m <= n.
DistanceReport match_all(SymbolView text, SymbolView pattern, const MatchConfig& cfg,
                         MatchStats* stats = nullptr);

/// All alignments of `pattern` in one window of length at most 2m.
DistanceReport window_match(SymbolView window, SymbolView pattern, const MatchConfig& cfg);

}  // namespace kmm
