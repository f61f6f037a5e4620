#include "kmm/kernel.hpp"

#include <stdexcept>

#include "kmm/karloff.hpp"

namespace kmm {

PeriodVerdict detect_period(SymbolView pattern, std::size_t k, std::size_t repetitions,
                            std::uint64_t seed, const LceIndex& lce, int threads) {
  const std::size_t m = pattern.size();
  if (k >= m) throw std::invalid_argument("detect_period: k must be below |P|");
  if (lce.pattern_length() != m) {
    throw std::invalid_argument("detect_period: LCE index built over another pattern");
  }
  PeriodVerdict verdict;
  if (k == 0) return verdict;
  const auto est = self_estimates(pattern, k, repetitions, seed, threads);
  for (std::size_t pi = 1; pi <= k; ++pi) {
    if (est.values[pi] > 6.0 * static_cast<double>(k)) continue;
    ++verdict.candidates_checked;
    if (const auto d = lce.self_distance(pi, 4 * k)) {
      verdict.period = pi;
      verdict.verified_distance = *d;
      break;
    }
  }
  return verdict;
}

std::size_t trim_runs_limit(std::size_t k, std::size_t ell, std::size_t verified_distance) {
  return ell + verified_distance + 2 * k;
}

TrimResult trim_text(SymbolView window, std::size_t pattern_length, std::size_t ell,
                     std::size_t runs_limit) {
  const std::size_t m = pattern_length;
  if (ell == 0) throw std::invalid_argument("trim_text: ell must be positive");
  if (window.size() < m) throw std::invalid_argument("trim_text: window shorter than pattern");

  std::size_t start = m, runs = 0;
  while (start > 0) {
    const std::size_t p = start - 1;
    const std::size_t added = (p + ell < m) ? (window[p] != window[p + ell]) : 1;
    if (runs + added > runs_limit) break;
    runs += added;
    start = p;
  }
  std::size_t stop = m;
  runs = 0;
  while (stop < window.size()) {
    const std::size_t p = stop;
    const std::size_t added = (p >= m + ell) ? (window[p] != window[p - ell]) : 1;
    if (runs + added > runs_limit) break;
    runs += added;
    stop = p + 1;
  }
  return {start, stop - start};
}

KernelInstance rearrange(SymbolView t_prime, SymbolView pattern, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("rearrange: ell must be positive");
  KernelInstance inst;
  inst.ell = ell;
  inst.t_prime_length = t_prime.size();
  inst.pattern_length = pattern.size();
  inst.m1 = (t_prime.size() + ell - 1) / ell;
  inst.m2 = (pattern.size() + ell - 1) / ell;
  if (inst.m2 > inst.m1) throw std::invalid_argument("rearrange: pattern longer than text");

  const std::size_t width = inst.m1 * ell;
  std::vector<Symbol> text(t_prime.begin(), t_prime.end());
  text.resize(width, kTextSentinel);
  std::vector<Symbol> shifted(text.begin() + static_cast<std::ptrdiff_t>(ell), text.end());
  shifted.resize(width, kTextSentinel);
  std::vector<Symbol> pat(pattern.begin(), pattern.end());
  pat.resize(width, kPatternSentinel);

  std::vector<Symbol> t_star = ell_encoding(text, ell).symbols();
  const auto tail = ell_encoding(shifted, ell);
  t_star.insert(t_star.end(), tail.begin(), tail.end());
  inst.t_star = SymbolString(std::move(t_star));
  inst.p_star = ell_encoding(pat, ell);
  return inst;
}

KernelInstance build_kernel(SymbolView t_prime, SymbolView pattern, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("build_kernel: ell must be positive");
  const std::size_t padding = (ell - pattern.size() % ell) % ell;
  std::vector<Symbol> extended(t_prime.begin(), t_prime.end());
  extended.resize(t_prime.size() + padding, kTextSentinel);
  auto inst = rearrange(extended, pattern, ell);
  inst.t_prime_length = t_prime.size();
  return inst;
}

std::size_t map_alignment(const KernelInstance& inst, std::size_t alpha) {
  if (alpha > inst.max_alignment()) throw std::out_of_range("map_alignment: alpha out of range");
  return alpha / inst.ell + (alpha % inst.ell) * inst.m1;
}

}  // namespace kmm
