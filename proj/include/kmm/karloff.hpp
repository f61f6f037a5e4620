#pragma once

#include <cstdint>
#include <vector>

#include "kmm/symbols.hpp"

namespace kmm {

/// Approximate per-alignment mismatch counts.
///
/// Each repetition r projects every symbol to a random bit h_r (text and
/// pattern sentinels always project to complementary bits) and counts binary
/// mismatches; the estimate is (2 / R) times their sum, which is unbiased
/// because distinct symbols collide with probability 1/2. Inputs over at most
/// two distinct symbols need no projection and are counted exactly.
struct Estimate {
  std::vector<double> values;
  std::size_t repetitions = 0;
  std::uint64_t seed = 0;
  bool exact = false;
};

/// 64 * ceil(log2 m), at least 64.
std::size_t default_repetitions(std::size_t m);

/// h_r(symbol) for repetition `rep` under `seed`.
int projection_bit(Symbol symbol, std::size_t rep, std::uint64_t seed);

/// One estimate per alignment 0 .. |text| - |pattern|.
Estimate estimate_distances(SymbolView text, SymbolView pattern, std::size_t repetitions,
                            std::uint64_t seed, int threads = 0);

/// values[pi] estimates Ham(P[pi..], P[..m-1-pi]) for pi in [1, max_shift];
/// values[0] is 0.
Estimate self_estimates(SymbolView pattern, std::size_t max_shift, std::size_t repetitions,
                        std::uint64_t seed, int threads = 0);

}  // namespace kmm
