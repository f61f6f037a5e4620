#include "kmm/lce.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "parallel.hpp"

namespace kmm {
namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
  return r >= kMod ? r - kMod : r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kMod ? r - kMod : r;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

}  // namespace

LceIndex::LceIndex(SymbolView pattern, SymbolView text, std::uint64_t seed)
    : pattern_(pattern.begin(), pattern.end()), text_(text.begin(), text.end()) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::uint64_t> dist(1u << 20, kMod - 2);
  base1_ = dist(rng);
  base2_ = dist(rng);
  const std::size_t longest = std::max(pattern_.size(), text_.size()) + 1;
  pow1_.resize(longest);
  pow2_.resize(longest);
  pow1_[0] = pow2_[0] = 1;
  for (std::size_t i = 1; i < longest; ++i) {
    pow1_[i] = mul_mod(pow1_[i - 1], base1_);
    pow2_[i] = mul_mod(pow2_[i - 1], base2_);
  }
  fp_pattern_ = fingerprint(pattern_);
  fp_text_ = fingerprint(text_);
}

LceIndex::Fingerprints LceIndex::fingerprint(SymbolView s) const {
  Fingerprints f;
  f.h1.resize(s.size() + 1);
  f.h2.resize(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    f.h1[i + 1] = add_mod(mul_mod(f.h1[i], base1_), s[i] + 1);
    f.h2[i + 1] = add_mod(mul_mod(f.h2[i], base2_), s[i] + 1);
  }
  return f;
}

bool LceIndex::equal(const Fingerprints& fa, std::size_t a, const Fingerprints& fb,
                     std::size_t b, std::size_t len) const {
  auto window = [&](const std::vector<std::uint64_t>& h, const std::vector<std::uint64_t>& pw,
                    std::size_t from) { return sub_mod(h[from + len], mul_mod(h[from], pw[len])); };
  return window(fa.h1, pow1_, a) == window(fb.h1, pow1_, b) &&
         window(fa.h2, pow2_, a) == window(fb.h2, pow2_, b);
}

std::size_t LceIndex::extend(SymbolView sa, const Fingerprints& fa, std::size_t a, SymbolView sb,
                             const Fingerprints& fb, std::size_t b) const {
  const std::size_t limit = std::min(sa.size() - a, sb.size() - b);
  // Short extensions are the common case; scan a few symbols directly first.
  std::size_t len = 0;
  while (len < limit && len < 8) {
    if (sa[a + len] != sb[b + len]) return len;
    ++len;
  }
  if (len == limit) return len;
  // Gallop: find hi with mismatch inside [lo, hi).
  std::size_t lo = len, step = 16;
  std::size_t hi = lo;
  while (true) {
    hi = std::min(limit, lo + step);
    if (!equal(fa, a, fb, b, hi)) break;
    lo = hi;
    if (hi == limit) return limit;
    step *= 2;
  }
  // Invariant: prefix of length lo matches, prefix of length hi does not.
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (equal(fa, a, fb, b, mid)) lo = mid; else hi = mid;
  }
  return lo;
}

std::size_t LceIndex::lce(std::size_t p_pos, std::size_t t_pos) const {
  if (p_pos > pattern_.size() || t_pos > text_.size()) {
    throw std::out_of_range("lce: position out of range");
  }
  return extend(pattern_, fp_pattern_, p_pos, text_, fp_text_, t_pos);
}

std::size_t LceIndex::lce_pattern(std::size_t a, std::size_t b) const {
  if (a > pattern_.size() || b > pattern_.size()) {
    throw std::out_of_range("lce_pattern: position out of range");
  }
  return extend(pattern_, fp_pattern_, a, pattern_, fp_pattern_, b);
}

BoundedCount LceIndex::verify_alignment(std::size_t i, std::size_t cap,
                                        std::size_t* queries) const {
  const std::size_t m = pattern_.size();
  if (i + m > text_.size()) throw std::out_of_range("verify_alignment: alignment out of range");
  std::size_t mismatches = 0, j = 0, issued = 0;
  BoundedCount result;
  while (true) {
    ++issued;
    j += extend(pattern_, fp_pattern_, j, text_, fp_text_, i + j);
    if (j >= m) {
      result = mismatches;
      break;
    }
    if (++mismatches > cap) break;
    ++j;
  }
  if (queries) *queries += issued;
  return result;
}

BoundedCount LceIndex::self_distance(std::size_t pi, std::size_t cap) const {
  const std::size_t m = pattern_.size();
  if (pi < 1 || pi >= m) throw std::out_of_range("self_distance: shift out of range");
  std::size_t mismatches = 0, j = 0;
  while (true) {
    j += extend(pattern_, fp_pattern_, j, pattern_, fp_pattern_, j + pi);
    if (j + pi >= m) return mismatches;
    if (++mismatches > cap) return std::nullopt;
    ++j;
  }
}

DistanceReport landau_vishkin(SymbolView text, SymbolView pattern, std::size_t k,
                              std::uint64_t seed, int threads) {
  if (pattern.empty()) throw std::invalid_argument("landau_vishkin: empty pattern");
  if (pattern.size() > text.size()) {
    throw std::invalid_argument("landau_vishkin: pattern longer than text");
  }
  const LceIndex index(pattern, text, seed);
  DistanceReport report;
  report.k = k;
  const auto count = static_cast<std::int64_t>(text.size() - pattern.size() + 1);
  report.entries.resize(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 256) num_threads(detail::resolve_threads(threads))
  for (std::int64_t i = 0; i < count; ++i) {
    const auto d = index.verify_alignment(static_cast<std::size_t>(i), k);
    if (d) report.entries[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(*d);
  }
  return report;
}

}  // namespace kmm
