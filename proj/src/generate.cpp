#include "kmm/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kmm::gen {
namespace {

Symbol draw(std::size_t sigma, std::mt19937_64& rng) {
  return static_cast<Symbol>(std::uniform_int_distribution<std::size_t>(0, sigma - 1)(rng));
}

// Replaces `count` distinct positions by a different symbol.
void plant(std::vector<Symbol>& s, std::size_t count, std::size_t sigma, std::mt19937_64& rng) {
  if (sigma < 2 || s.empty()) return;
  count = std::min(count, s.size());
  std::vector<std::size_t> positions(s.size());
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = std::uniform_int_distribution<std::size_t>(i, s.size() - 1)(rng);
    std::swap(positions[i], positions[j]);
    auto& c = s[positions[i]];
    const Symbol shift = static_cast<Symbol>(
        std::uniform_int_distribution<std::size_t>(1, sigma - 1)(rng));
    c = static_cast<Symbol>((c + shift) % sigma);
  }
}

void check_sigma(std::size_t sigma) {
  if (sigma == 0 || sigma > kMaxInputSymbol) throw std::invalid_argument("sigma out of range");
}

}  // namespace

SymbolString random_string(std::size_t n, std::size_t sigma, std::mt19937_64& rng) {
  check_sigma(sigma);
  std::vector<Symbol> s(n);
  for (auto& c : s) c = draw(sigma, rng);
  return SymbolString(std::move(s), sigma);
}

Instance random_instance(std::size_t n, std::size_t m, std::size_t sigma, std::uint64_t seed,
                         std::size_t occurrences, std::size_t noise) {
  if (m == 0 || m > n) throw std::invalid_argument("random_instance: need 0 < m <= n");
  std::mt19937_64 rng(seed);
  auto text = random_string(n, sigma, rng).symbols();
  auto pattern = random_string(m, sigma, rng);
  for (std::size_t o = 0; o < occurrences; ++o) {
    std::vector<Symbol> copy = pattern.symbols();
    plant(copy, std::uniform_int_distribution<std::size_t>(0, noise)(rng), sigma, rng);
    const auto at = std::uniform_int_distribution<std::size_t>(0, n - m)(rng);
    std::copy(copy.begin(), copy.end(), text.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return {SymbolString(std::move(text), sigma), std::move(pattern)};
}

Instance periodic_instance(const PeriodicSpec& spec) {
  if (spec.m == 0 || spec.m > spec.n) throw std::invalid_argument("periodic_instance: need 0 < m <= n");
  if (spec.period == 0) throw std::invalid_argument("periodic_instance: period must be positive");
  check_sigma(spec.sigma);
  std::mt19937_64 rng(spec.seed);
  std::vector<Symbol> word(spec.period);
  for (auto& c : word) c = draw(spec.sigma, rng);

  std::vector<Symbol> text(spec.n), pattern(spec.m);
  for (std::size_t i = 0; i < spec.n; ++i) text[i] = word[i % spec.period];
  for (std::size_t i = 0; i < spec.m; ++i) pattern[i] = word[i % spec.period];
  plant(pattern, spec.pattern_plants, spec.sigma, rng);
  plant(text, spec.text_plants, spec.sigma, rng);
  return {SymbolString(std::move(text), spec.sigma), SymbolString(std::move(pattern), spec.sigma)};
}

}  // namespace kmm::gen
