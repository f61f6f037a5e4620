#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kmm/symbols.hpp"

namespace kmm {

enum class Backend { Fft, Ntt };

/// Raised when a floating-point correlation is not safely integral.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How a text/pattern correlation is evaluated.
///
/// The FFT backend only needs the valid alignments, so a circular transform
/// of any (smooth) size >= |text| suffices; the NTT backend computes the full
/// linear convolution at a power of two >= |text| + |pattern| - 1. Rounded FFT
/// outputs must lie within `tolerance` of an integer.
struct CorrelationPlan {
  std::size_t transform_size = 0;
  Backend backend = Backend::Fft;
  double tolerance = 0.25;

  static CorrelationPlan for_lengths(std::size_t text_length, std::size_t pattern_length,
                                     Backend backend = Backend::Fft);
};

/// out[i] = sum_j text[i + j] * pattern[j] for every i in [0, n - m].
std::vector<std::int64_t> cross_correlate(std::span<const std::int64_t> text,
                                          std::span<const std::int64_t> pattern,
                                          const CorrelationPlan& plan);

/// Entry i counts positions j with text[i + j] == pattern[j] == c.
std::vector<std::size_t> count_symbol_matches(SymbolView text, SymbolView pattern, Symbol c,
                                              Backend backend = Backend::Fft);

/// Hamming distances of binary windows (symbols must be 0 or 1).
std::vector<std::size_t> count_binary_mismatches(SymbolView text01, SymbolView pattern01,
                                                 Backend backend = Backend::Fft);

/// ceil(sqrt(m log2 m)), at least 1. Shared default for letter thresholds.
std::size_t default_threshold(std::size_t m);

/// Exact (uncapped) distance at every alignment. Symbols occurring more than
/// `threshold` times in the pattern are counted by correlation, the rest by
/// walking their pattern positions.
std::vector<std::size_t> abrahamson_distances(SymbolView text, SymbolView pattern,
                                              std::size_t threshold,
                                              Backend backend = Backend::Fft, int threads = 0);

}  // namespace kmm
