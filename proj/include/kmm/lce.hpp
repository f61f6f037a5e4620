#pragma once

#include <cstdint>

#include "kmm/report.hpp"
#include "kmm/symbols.hpp"

namespace kmm {

/// Longest-common-extension queries between a pattern and a text, answered
/// by comparing polynomial fingerprints (two random bases modulo 2^61 - 1)
/// with galloping plus binary search. Queries are O(log) and thread-safe.
class LceIndex {
 public:
  LceIndex(SymbolView pattern, SymbolView text, std::uint64_t seed);

  std::size_t pattern_length() const noexcept { return pattern_.size(); }
  std::size_t text_length() const noexcept { return text_.size(); }

  /// Length of the longest common prefix of P[p_pos..] and T[t_pos..].
  std::size_t lce(std::size_t p_pos, std::size_t t_pos) const;
  /// Longest common prefix of P[a..] and P[b..].
  std::size_t lce_pattern(std::size_t a, std::size_t b) const;

  /// Ham(P, T[i..i+m-1]) if it is at most `cap`, else nullopt. Issues at most
  /// cap + 2 lce queries; the count is added to `*queries` when given.
  BoundedCount verify_alignment(std::size_t i, std::size_t cap,
                                std::size_t* queries = nullptr) const;

  /// Ham(P[pi..], P[..m-1-pi]) if at most `cap`, via jumps over the pattern.
  BoundedCount self_distance(std::size_t pi, std::size_t cap) const;

 private:
  struct Fingerprints {
    std::vector<std::uint64_t> h1, h2;  // prefix hashes, size len+1
  };
  Fingerprints fingerprint(SymbolView s) const;
  bool equal(const Fingerprints& fa, std::size_t a, const Fingerprints& fb, std::size_t b,
             std::size_t len) const;
  std::size_t extend(SymbolView sa, const Fingerprints& fa, std::size_t a, SymbolView sb,
                     const Fingerprints& fb, std::size_t b) const;

  std::vector<Symbol> pattern_;
  std::vector<Symbol> text_;
  std::uint64_t base1_ = 0, base2_ = 0;
  std::vector<std::uint64_t> pow1_, pow2_;
  Fingerprints fp_pattern_, fp_text_;
};

/// O(nk) k-mismatch matching: every alignment verified by kangaroo jumps.
DistanceReport landau_vishkin(SymbolView text, SymbolView pattern, std::size_t k,
                              std::uint64_t seed = 0, int threads = 0);

}  // namespace kmm
