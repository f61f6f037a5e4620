#include "kmm/rle_match.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "kmm/convolution.hpp"
#include "parallel.hpp"

namespace kmm {

LetterClasses classify_letters(const RleView& p_star, std::size_t t) {
  if (t == 0) throw std::invalid_argument("classify_letters: threshold must be positive");
  LetterClasses classes;
  for (const auto& [c, runs] : p_star.by_symbol()) {
    if (is_sentinel(c)) continue;
    (runs.size() > t ? classes.heavy : classes.light).push_back(c);
  }
  std::sort(classes.heavy.begin(), classes.heavy.end());
  std::sort(classes.light.begin(), classes.light.end());
  return classes;
}

DerivativeAccumulator::DerivativeAccumulator(std::size_t text_length, std::size_t pattern_length)
    : text_length_(text_length),
      pattern_length_(pattern_length),
      lowest_(-static_cast<std::ptrdiff_t>(pattern_length) - 2),
      d2_(text_length + pattern_length + 5, 0) {}

void DerivativeAccumulator::apply_run_pair(const Run& text_run, const Run& pattern_run) {
  const auto u = static_cast<std::ptrdiff_t>(text_run.start);
  const auto v = static_cast<std::ptrdiff_t>(text_run.last());
  const auto y = static_cast<std::ptrdiff_t>(pattern_run.start);
  const auto z = static_cast<std::ptrdiff_t>(pattern_run.last());
  d2_[static_cast<std::size_t>(u - z - lowest_)] += 1;
  d2_[static_cast<std::size_t>(v - z + 1 - lowest_)] -= 1;
  d2_[static_cast<std::size_t>(u - y + 1 - lowest_)] -= 1;
  d2_[static_cast<std::size_t>(v - y + 2 - lowest_)] += 1;
  ++updates_;
}

std::int64_t DerivativeAccumulator::at(std::ptrdiff_t offset) const {
  if (offset < lowest_ || offset > highest_offset()) {
    throw std::out_of_range("DerivativeAccumulator: offset out of range");
  }
  return d2_[static_cast<std::size_t>(offset - lowest_)];
}

std::int64_t DerivativeAccumulator::total() const noexcept {
  return std::accumulate(d2_.begin(), d2_.end(), std::int64_t{0});
}

std::vector<std::int64_t> DerivativeAccumulator::counts_over(std::ptrdiff_t lo,
                                                            std::ptrdiff_t hi) const {
  if (lo < lowest_ || hi > highest_offset() || lo > hi) {
    throw std::out_of_range("DerivativeAccumulator: range out of bounds");
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  std::int64_t slope = 0, value = 0;
  for (std::ptrdiff_t d = lowest_; d <= hi; ++d) {
    slope += d2_[static_cast<std::size_t>(d - lowest_)];
    value += slope;
    if (d >= lo) out.push_back(value);
  }
  return out;
}

std::vector<std::int64_t> DerivativeAccumulator::recover_counts() const {
  if (pattern_length_ > text_length_) return {};
  return counts_over(0, static_cast<std::ptrdiff_t>(text_length_ - pattern_length_));
}

std::vector<std::int64_t> integrate_second_difference(std::span<const std::int64_t> d2,
                                                      std::int64_t a0, std::int64_t a1) {
  std::vector<std::int64_t> a(d2.size());
  if (!a.empty()) a[0] = a0;
  if (a.size() > 1) a[1] = a1;
  for (std::size_t i = 2; i < a.size(); ++i) a[i] = d2[i] + 2 * a[i - 1] - a[i - 2];
  return a;
}

std::vector<std::size_t> star_distances(const KernelInstance& inst, std::size_t t,
                                        StarStats* stats, int threads) {
  const SymbolView text = inst.t_star;
  const SymbolView pattern = inst.p_star;
  if (pattern.empty() || pattern.size() > text.size()) {
    throw std::invalid_argument("star_distances: malformed kernel instance");
  }
  const std::size_t alignments = text.size() - pattern.size() + 1;
  const RleView p_rle(pattern);
  const auto classes = classify_letters(p_rle, t);

  std::vector<std::int64_t> matches(alignments, 0);
  const auto heavy_count = static_cast<std::int64_t>(classes.heavy.size());
  detail::ExceptionCollector errors;
#pragma omp parallel num_threads(detail::resolve_threads(threads)) if (heavy_count > 1)
  {
    std::vector<std::int64_t> local(alignments, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t h = 0; h < heavy_count; ++h) {
      errors.run([&] {
        const auto counts =
            count_symbol_matches(text, pattern, classes.heavy[static_cast<std::size_t>(h)]);
        for (std::size_t i = 0; i < alignments; ++i) {
          local[i] += static_cast<std::int64_t>(counts[i]);
        }
      });
    }
#pragma omp critical
    for (std::size_t i = 0; i < alignments; ++i) matches[i] += local[i];
  }
  errors.rethrow();

  // Text runs outer, the pattern's run list of the same light letter inner.
  const std::unordered_set<Symbol> light(classes.light.begin(), classes.light.end());
  DerivativeAccumulator acc(text.size(), pattern.size());
  const RleView t_rle(text);
  for (const Run& text_run : t_rle.runs()) {
    if (!light.contains(text_run.symbol)) continue;
    for (const Run& pattern_run : p_rle.runs_of(text_run.symbol)) {
      acc.apply_run_pair(text_run, pattern_run);
    }
  }
  const auto light_matches = acc.recover_counts();

  std::vector<std::size_t> out(alignments);
  for (std::size_t i = 0; i < alignments; ++i) {
    out[i] = pattern.size() - static_cast<std::size_t>(matches[i] + light_matches[i]);
  }
  if (stats) {
    stats->heavy_letters = classes.heavy.size();
    stats->light_letters = classes.light.size();
    stats->run_pairs = acc.updates();
  }
  return out;
}

DistanceReport kernel_distances(const KernelInstance& inst, std::size_t k, std::size_t t,
                                StarStats* stats, int threads) {
  DistanceReport report;
  report.k = k;
  if (inst.t_prime_length < inst.pattern_length) return report;
  const std::size_t threshold = t ? t : default_threshold(inst.pattern_length);
  const auto star = star_distances(inst, threshold, stats, threads);
  const std::size_t forced = (inst.m1 - inst.m2) * inst.ell + inst.pattern_padding();
  const std::size_t count = inst.t_prime_length - inst.pattern_length + 1;
  report.entries.resize(count);
  for (std::size_t alpha = 0; alpha < count; ++alpha) {
    const std::size_t d = star[map_alignment(inst, alpha)] - forced;
    if (d <= k) report.entries[alpha] = static_cast<std::uint32_t>(d);
  }
  return report;
}

}  // namespace kmm
