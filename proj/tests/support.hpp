#pragma once

#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "kmm/report.hpp"
#include "kmm/symbols.hpp"

namespace kmm::test {

/// Bytes to symbols, with '#' and '$' standing for the text and pattern
/// sentinels.
inline SymbolString sym(std::string_view s) {
  std::vector<Symbol> out;
  for (char c : s) {
    if (c == '#') out.push_back(kTextSentinel);
    else if (c == '$') out.push_back(kPatternSentinel);
    else if (c != ' ') out.push_back(static_cast<unsigned char>(c));
  }
  return SymbolString(std::move(out));
}

inline DistanceReport report(std::size_t k, std::vector<Distance> entries) {
  return DistanceReport{k, std::move(entries)};
}

inline SymbolString random_symbols(std::size_t n, std::size_t sigma, std::mt19937_64& rng) {
  std::uniform_int_distribution<Symbol> d(0, static_cast<Symbol>(sigma - 1));
  std::vector<Symbol> s(n);
  for (auto& c : s) c = d(rng);
  return SymbolString(std::move(s));
}

}  // namespace kmm::test
