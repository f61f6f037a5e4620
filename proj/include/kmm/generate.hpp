#pragma once

#include <cstdint>
#include <random>

#include "kmm/symbols.hpp"

namespace kmm::gen {

struct Instance {
  SymbolString text;
  SymbolString pattern;
};

/// Uniform string over symbols [0, sigma).
SymbolString random_string(std::size_t n, std::size_t sigma, std::mt19937_64& rng);

/// Independent uniform text and pattern. When `occurrences` > 0, that many
/// copies of the pattern, each with up to `noise` substitutions, are pasted
/// into the text at random positions.
Instance random_instance(std::size_t n, std::size_t m, std::size_t sigma, std::uint64_t seed,
                         std::size_t occurrences = 0, std::size_t noise = 0);

struct PeriodicSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t period = 1;
  std::size_t sigma = 2;
  std::size_t pattern_plants = 0;  // substitutions in the pattern
  std::size_t text_plants = 0;     // substitutions in the text
  std::uint64_t seed = 0;
};

/// Text and pattern drawn from the same random word of length `period`,
/// repeated, with planted substitutions at distinct random positions. With
/// sigma = 1 no substitution is possible and none is planted.
Instance periodic_instance(const PeriodicSpec& spec);

}  // namespace kmm::gen
