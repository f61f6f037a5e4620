#include "kmm/pipeline.hpp"

#include <stdexcept>

#include "kmm/convolution.hpp"
#include "kmm/karloff.hpp"
#include "kmm/kernel.hpp"
#include "kmm/lce.hpp"
#include "kmm/oracle.hpp"
#include "kmm/rle_match.hpp"
#include "parallel.hpp"

namespace kmm {
namespace {

struct PatternPlan {
  PeriodVerdict verdict;
  std::size_t repetitions = 0;
  std::size_t threshold = 0;
};

struct WindowStats {
  bool kernel = false;
  std::size_t candidates = 0;
  std::size_t run_pairs = 0;
};

PatternPlan plan_pattern(SymbolView pattern, const MatchConfig& cfg, const LceIndex& lce) {
  PatternPlan plan;
  plan.repetitions = cfg.repetitions ? cfg.repetitions : default_repetitions(pattern.size());
  plan.threshold = cfg.threshold ? cfg.threshold : default_threshold(pattern.size());
  plan.verdict = detect_period(pattern, cfg.k, plan.repetitions, cfg.seed, lce, cfg.threads);
  return plan;
}

// Fills out[0, owned) for the window text[start, start + length).
void solve_window(SymbolView text, std::size_t start, std::size_t length, std::size_t owned,
                  SymbolView pattern, const PatternPlan& plan, const LceIndex& lce,
                  const MatchConfig& cfg, std::uint64_t seed, int threads, Distance* out,
                  WindowStats& ws) {
  const std::size_t m = pattern.size();
  const std::size_t k = cfg.k;
  const SymbolView window = text.subspan(start, length);

  if (!plan.verdict.small()) {
    const auto est = estimate_distances(window, pattern, plan.repetitions, seed, threads);
    const double keep = cfg.filter_multiplier * static_cast<double>(k);
    for (std::size_t i = 0; i < owned; ++i) {
      if (est.values[i] > keep) continue;
      ++ws.candidates;
      if (const auto d = lce.verify_alignment(start + i, k)) {
        out[i] = static_cast<std::uint32_t>(*d);
      }
    }
    return;
  }

  const std::size_t ell = *plan.verdict.period;
  const auto limit = trim_runs_limit(k, ell, plan.verdict.verified_distance);
  const auto trimmed = trim_text(window, m, ell, limit);
  if (trimmed.length < m) return;
  ws.kernel = true;
  auto inst = build_kernel(window.subspan(trimmed.offset, trimmed.length), pattern, ell);
  inst.t_prime_offset = trimmed.offset;
  StarStats star;
  const auto report = kernel_distances(inst, k, plan.threshold, &star, threads);
  ws.run_pairs = star.run_pairs;
  for (std::size_t alpha = 0; alpha < report.size(); ++alpha) {
    const std::size_t pos = trimmed.offset + alpha;
    if (pos < owned) out[pos] = report.entries[alpha];
  }
}

void validate(SymbolView text, SymbolView pattern) {
  if (pattern.empty()) throw std::invalid_argument("match: empty pattern");
  if (pattern.size() > text.size()) throw std::invalid_argument("match: pattern longer than text");
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "auto") return Algorithm::Auto;
  if (name == "brute") return Algorithm::Brute;
  if (name == "lv") return Algorithm::LandauVishkin;
  if (name == "abrahamson") return Algorithm::Abrahamson;
  if (name == "paper") return Algorithm::Paper;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Brute: return "brute";
    case Algorithm::LandauVishkin: return "lv";
    case Algorithm::Abrahamson: return "abrahamson";
    case Algorithm::Paper: return "paper";
  }
  return "?";
}

std::uint64_t window_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

DistanceReport match_all(SymbolView text, SymbolView pattern, const MatchConfig& cfg,
                         MatchStats* stats) {
  validate(text, pattern);
  const std::size_t n = text.size(), m = pattern.size(), k = cfg.k;
  MatchStats local;
  MatchStats& st = stats ? *stats : local;
  st = MatchStats{};

  switch (cfg.algorithm) {
    case Algorithm::Brute:
      return oracle::brute_distances(text, pattern, k);
    case Algorithm::LandauVishkin:
      return landau_vishkin(text, pattern, k, cfg.seed, cfg.threads);
    case Algorithm::Abrahamson:
      return DistanceReport::from_exact(
          abrahamson_distances(text, pattern,
                               cfg.threshold ? cfg.threshold : default_threshold(m),
                               Backend::Fft, cfg.threads),
          k);
    case Algorithm::Auto:
    case Algorithm::Paper:
      break;
  }
  if (k >= m) {
    st.downgraded = true;
    return DistanceReport::from_exact(
        abrahamson_distances(text, pattern, default_threshold(m), Backend::Fft, cfg.threads), k);
  }

  const LceIndex lce(pattern, text, cfg.seed);
  const auto plan = plan_pattern(pattern, cfg, lce);
  st.small_period = plan.verdict.small();
  st.period = plan.verdict.period.value_or(0);

  DistanceReport report;
  report.k = k;
  report.entries.resize(n - m + 1);
  const std::size_t windows = (n - m) / m + 1;
  st.windows = windows;
  std::vector<WindowStats> per_window(windows);

  const int threads = detail::resolve_threads(cfg.threads);
  // Few windows: run them in order and let the kernels use the threads.
  const bool outer = threads > 1 && windows >= static_cast<std::size_t>(threads);
  detail::ExceptionCollector errors;
  const auto window_count = static_cast<std::int64_t>(windows);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (outer)
  for (std::int64_t w = 0; w < window_count; ++w) {
    errors.run([&] {
      const auto index = static_cast<std::size_t>(w);
      const std::size_t start = index * m;
      const std::size_t length = std::min(2 * m, n - start);
      const std::size_t owned = std::min(m, n - m + 1 - start);
      solve_window(text, start, length, owned, pattern, plan, lce, cfg,
                   window_seed(cfg.seed, index), outer ? 1 : threads,
                   report.entries.data() + start, per_window[index]);
    });
  }
  errors.rethrow();

  for (const auto& ws : per_window) {
    st.kernel_windows += ws.kernel;
    st.filtered_candidates += ws.candidates;
    st.run_pairs += ws.run_pairs;
  }
  return report;
}

DistanceReport window_match(SymbolView window, SymbolView pattern, const MatchConfig& cfg) {
  validate(window, pattern);
  const std::size_t m = pattern.size();
  if (window.size() > 2 * m) throw std::invalid_argument("window_match: window longer than 2m");
  if (cfg.k >= m) {
    return DistanceReport::from_exact(
        abrahamson_distances(window, pattern, default_threshold(m), Backend::Fft, cfg.threads),
        cfg.k);
  }
  const LceIndex lce(pattern, window, cfg.seed);
  const auto plan = plan_pattern(pattern, cfg, lce);
  DistanceReport report;
  report.k = cfg.k;
  report.entries.resize(window.size() - m + 1);
  WindowStats ws;
  solve_window(window, 0, window.size(), report.size(), pattern, plan, lce, cfg,
               window_seed(cfg.seed, 0), detail::resolve_threads(cfg.threads),
               report.entries.data(), ws);
  return report;
}

}  // namespace kmm
