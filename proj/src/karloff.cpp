#include "kmm/karloff.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fft_backend.hpp"
#include "kmm/convolution.hpp"
#include "parallel.hpp"

namespace kmm {
namespace {

constexpr std::uint64_t kSentinelKey = std::uint64_t{1} << 40;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Dense relabelling of the symbols of both strings.
struct DenseAlphabet {
  std::vector<Symbol> symbols;
  std::vector<std::uint32_t> text_ids, pattern_ids;
};

DenseAlphabet relabel(SymbolView text, SymbolView pattern) {
  DenseAlphabet a;
  std::unordered_map<Symbol, std::uint32_t> ids;
  auto map = [&](SymbolView s, std::vector<std::uint32_t>& out) {
    out.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto [it, fresh] = ids.try_emplace(s[i], static_cast<std::uint32_t>(a.symbols.size()));
      if (fresh) a.symbols.push_back(s[i]);
      out[i] = it->second;
    }
  };
  map(text, a.text_ids);
  map(pattern, a.pattern_ids);
  return a;
}

// Sign (+1 / -1) of every dense symbol under repetition `rep`. With
// `identity`, symbol 0 maps to +1 and symbol 1 to -1.
std::vector<double> signs(const DenseAlphabet& a, std::size_t rep, std::uint64_t seed,
                          bool identity) {
  std::vector<double> out(a.symbols.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int bit = identity ? static_cast<int>(i) : projection_bit(a.symbols[i], rep, seed);
    out[i] = bit ? -1.0 : 1.0;
  }
  return out;
}

void fill(double* dst, std::size_t size, const std::vector<std::uint32_t>& ids,
          const std::vector<double>& sign) {
  std::size_t i = 0;
  for (; i < ids.size(); ++i) dst[i] = sign[ids[i]];
  std::fill(dst + i, dst + size, 0.0);
}

std::int64_t round_checked(double raw) {
  const double rounded = std::nearbyint(raw);
  if (std::abs(raw - rounded) > 0.25) {
    throw PrecisionError("karloff: accumulated correlation " + std::to_string(raw) +
                         " drifted from an integer");
  }
  return static_cast<std::int64_t>(rounded);
}

// Sum over repetitions of the +-1 correlation, evaluated at lags [0, lags).
// `self` correlates the text with itself; otherwise text against pattern.
std::vector<std::int64_t> accumulate(const DenseAlphabet& a, bool self, std::size_t size,
                                     std::size_t lags, std::size_t reps, std::uint64_t seed,
                                     bool identity, int threads) {
  const auto& fft = detail::RealFft::of_size(size);
  const std::size_t bins = fft.bins();
  std::vector<std::complex<double>> total(bins, 0.0);
  detail::ExceptionCollector errors;
  const auto rep_count = static_cast<std::int64_t>(reps);

#pragma omp parallel num_threads(detail::resolve_threads(threads)) if (reps > 1)
  {
    auto x = detail::make_real_buffer(size);
    auto fx = detail::make_complex_buffer(bins);
    auto fy = detail::make_complex_buffer(bins);
    std::vector<std::complex<double>> acc(bins, 0.0);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < rep_count; ++r) {
      errors.run([&] {
        const auto sign = signs(a, static_cast<std::size_t>(r), seed, identity);
        fill(x.get(), size, a.text_ids, sign);
        fft.forward(x.get(), fx.get());
        if (self) {
          for (std::size_t b = 0; b < bins; ++b) acc[b] += std::norm(fx[b]);
        } else {
          fill(x.get(), size, a.pattern_ids, sign);
          fft.forward(x.get(), fy.get());
          for (std::size_t b = 0; b < bins; ++b) acc[b] += fx[b] * std::conj(fy[b]);
        }
      });
    }
#pragma omp critical
    for (std::size_t b = 0; b < bins; ++b) total[b] += acc[b];
  }
  errors.rethrow();

  auto spectrum = detail::make_complex_buffer(bins);
  std::copy(total.begin(), total.end(), spectrum.get());
  auto out = detail::make_real_buffer(size);
  fft.backward(spectrum.get(), out.get());
  std::vector<std::int64_t> sums(lags);
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t i = 0; i < lags; ++i) sums[i] = round_checked(out[i] * scale);
  return sums;
}

}  // namespace

std::size_t default_repetitions(std::size_t m) {
  const std::size_t log = m > 1 ? static_cast<std::size_t>(std::bit_width(m - 1)) : 1;
  return 64 * std::max<std::size_t>(1, log);
}

int projection_bit(Symbol symbol, std::size_t rep, std::uint64_t seed) {
  const std::uint64_t stream = splitmix(seed ^ splitmix(rep));
  if (is_sentinel(symbol)) {
    const int bit = static_cast<int>(splitmix(stream ^ kSentinelKey) & 1);
    return symbol == kTextSentinel ? bit : 1 - bit;
  }
  return static_cast<int>(splitmix(stream ^ symbol) & 1);
}

Estimate estimate_distances(SymbolView text, SymbolView pattern, std::size_t repetitions,
                            std::uint64_t seed, int threads) {
  if (repetitions == 0) throw std::invalid_argument("estimate_distances: R must be positive");
  const std::size_t n = text.size(), m = pattern.size();
  if (m == 0 || m > n) throw std::invalid_argument("estimate_distances: bad pattern length");
  const auto alphabet = relabel(text, pattern);
  const bool exact = alphabet.symbols.size() <= 2;
  const std::size_t reps = exact ? 1 : repetitions;
  const auto sums = accumulate(alphabet, false, detail::smooth_size(n), n - m + 1, reps, seed,
                               exact, threads);

  Estimate est{std::vector<double>(sums.size()), repetitions, seed, exact};
  const auto rm = static_cast<double>(reps * m);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    // Each repetition contributes (m - corr) / 2 binary mismatches.
    const double mismatches = (rm - static_cast<double>(sums[i])) / 2.0;
    est.values[i] = exact ? mismatches : 2.0 * mismatches / static_cast<double>(reps);
  }
  return est;
}

Estimate self_estimates(SymbolView pattern, std::size_t max_shift, std::size_t repetitions,
                        std::uint64_t seed, int threads) {
  if (repetitions == 0) throw std::invalid_argument("self_estimates: R must be positive");
  const std::size_t m = pattern.size();
  if (max_shift >= m) throw std::invalid_argument("self_estimates: shift must be below |P|");
  const auto alphabet = relabel(pattern, {});
  const bool exact = alphabet.symbols.size() <= 2;
  const std::size_t reps = exact ? 1 : repetitions;
  const auto sums = accumulate(alphabet, true, detail::smooth_size(m + max_shift), max_shift + 1,
                               reps, seed, exact, threads);

  Estimate est{std::vector<double>(max_shift + 1, 0.0), repetitions, seed, exact};
  for (std::size_t pi = 1; pi <= max_shift; ++pi) {
    const auto overlap = static_cast<double>(reps * (m - pi));
    const double mismatches = (overlap - static_cast<double>(sums[pi])) / 2.0;
    est.values[pi] = exact ? mismatches : 2.0 * mismatches / static_cast<double>(reps);
  }
  return est;
}

}  // namespace kmm
