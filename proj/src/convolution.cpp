#include "kmm/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "fft_backend.hpp"
#include "kmm/ntt.hpp"
#include "parallel.hpp"

namespace kmm {
namespace {

void check_lengths(std::size_t n, std::size_t m) {
  if (m == 0) throw std::invalid_argument("correlation: empty pattern");
  if (m > n) throw std::invalid_argument("correlation: pattern longer than text");
}

std::vector<std::int64_t> indicator(SymbolView s, Symbol c) {
  std::vector<std::int64_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] == c;
  return out;
}

std::vector<std::size_t> to_counts(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

CorrelationPlan CorrelationPlan::for_lengths(std::size_t text_length, std::size_t pattern_length,
                                             Backend backend) {
  CorrelationPlan plan;
  plan.backend = backend;
  if (backend == Backend::Fft) {
    plan.transform_size = detail::smooth_size(text_length);
  } else {
    std::size_t n = 1;
    while (n < text_length + pattern_length - 1) n <<= 1;
    plan.transform_size = n;
  }
  return plan;
}

std::vector<std::int64_t> cross_correlate(std::span<const std::int64_t> text,
                                          std::span<const std::int64_t> pattern,
                                          const CorrelationPlan& plan) {
  const std::size_t n = text.size(), m = pattern.size();
  check_lengths(n, m);
  std::vector<std::int64_t> out(n - m + 1);

  if (plan.backend == Backend::Ntt) {
    std::vector<std::int64_t> reversed(pattern.rbegin(), pattern.rend());
    const auto full = ntt::convolve(text, reversed);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = full[i + m - 1];
    return out;
  }

  const std::size_t size = plan.transform_size;
  if (size < n) throw std::invalid_argument("cross_correlate: transform too small");
  const auto& fft = detail::RealFft::of_size(size);
  auto x = detail::make_real_buffer(size);
  auto y = detail::make_real_buffer(size);
  auto fx = detail::make_complex_buffer(fft.bins());
  auto fy = detail::make_complex_buffer(fft.bins());
  std::fill_n(x.get(), size, 0.0);
  std::fill_n(y.get(), size, 0.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(text[i]);
  for (std::size_t j = 0; j < m; ++j) y[j] = static_cast<double>(pattern[j]);
  fft.forward(x.get(), fx.get());
  fft.forward(y.get(), fy.get());
  for (std::size_t b = 0; b < fft.bins(); ++b) fx[b] *= std::conj(fy[b]);
  fft.backward(fx.get(), x.get());
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double raw = x[i] * scale;
    const double rounded = std::nearbyint(raw);
    if (std::abs(raw - rounded) > plan.tolerance) {
      throw PrecisionError("cross_correlate: output " + std::to_string(raw) +
                           " is not within tolerance of an integer");
    }
    out[i] = static_cast<std::int64_t>(rounded);
  }
  return out;
}

std::vector<std::size_t> count_symbol_matches(SymbolView text, SymbolView pattern, Symbol c,
                                              Backend backend) {
  if (is_sentinel(c)) throw std::invalid_argument("count_symbol_matches: sentinel symbol");
  check_lengths(text.size(), pattern.size());
  const auto t = indicator(text, c);
  const auto p = indicator(pattern, c);
  return to_counts(
      cross_correlate(t, p, CorrelationPlan::for_lengths(text.size(), pattern.size(), backend)));
}

std::vector<std::size_t> count_binary_mismatches(SymbolView text01, SymbolView pattern01,
                                                 Backend backend) {
  auto binary = [](SymbolView s) {
    for (Symbol c : s) {
      if (c > 1) throw std::invalid_argument("count_binary_mismatches: non-binary symbol");
    }
  };
  binary(text01);
  binary(pattern01);
  check_lengths(text01.size(), pattern01.size());
  const auto plan = CorrelationPlan::for_lengths(text01.size(), pattern01.size(), backend);
  const auto t1 = indicator(text01, 1), t0 = indicator(text01, 0);
  const auto p1 = indicator(pattern01, 1), p0 = indicator(pattern01, 0);
  const auto a = cross_correlate(t1, p0, plan);
  const auto b = cross_correlate(t0, p1, plan);
  std::vector<std::size_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::size_t>(a[i] + b[i]);
  return out;
}

std::size_t default_threshold(std::size_t m) {
  if (m < 2) return 1;
  const double t = std::ceil(std::sqrt(static_cast<double>(m) * std::log2(static_cast<double>(m))));
  return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

std::vector<std::size_t> abrahamson_distances(SymbolView text, SymbolView pattern,
                                              std::size_t threshold, Backend backend,
                                              int threads) {
  const std::size_t n = text.size(), m = pattern.size();
  check_lengths(n, m);
  const std::size_t alignments = n - m + 1;

  std::unordered_map<Symbol, std::vector<std::size_t>> positions;
  for (std::size_t j = 0; j < m; ++j) {
    if (!is_sentinel(pattern[j])) positions[pattern[j]].push_back(j);
  }
  std::vector<Symbol> heavy;
  for (const auto& [c, pos] : positions) {
    if (pos.size() > threshold) heavy.push_back(c);
  }
  std::sort(heavy.begin(), heavy.end());
  for (Symbol c : heavy) positions.erase(c);

  std::vector<std::int64_t> matches(alignments, 0);
  const auto heavy_count = static_cast<std::int64_t>(heavy.size());
  detail::ExceptionCollector errors;
#pragma omp parallel num_threads(detail::resolve_threads(threads)) if (heavy_count > 1)
  {
    std::vector<std::int64_t> local(alignments, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t h = 0; h < heavy_count; ++h) {
      errors.run([&] {
        const auto counts =
            count_symbol_matches(text, pattern, heavy[static_cast<std::size_t>(h)], backend);
        for (std::size_t i = 0; i < alignments; ++i) {
          local[i] += static_cast<std::int64_t>(counts[i]);
        }
      });
    }
#pragma omp critical
    for (std::size_t i = 0; i < alignments; ++i) matches[i] += local[i];
  }
  errors.rethrow();

  for (std::size_t i = 0; i < n; ++i) {
    auto it = positions.find(text[i]);
    if (it == positions.end()) continue;
    for (std::size_t j : it->second) {
      if (j > i) break;
      if (i - j < alignments) ++matches[i - j];
    }
  }

  std::vector<std::size_t> out(alignments);
  for (std::size_t i = 0; i < alignments; ++i) out[i] = m - static_cast<std::size_t>(matches[i]);
  return out;
}

}  // namespace kmm
