#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kmm {

using Symbol = std::uint32_t;
using SymbolView = std::span<const Symbol>;

/// Input symbols must stay below this bound; the codes above it are reserved.
inline constexpr Symbol kMaxInputSymbol = (Symbol{1} << 31) - 16;

/// Padding symbol used on the text side ('#'). Never appears in a pattern.
inline constexpr Symbol kTextSentinel = (Symbol{1} << 31) - 1;
/// Padding symbol used on the pattern side ('$'). Never appears in a text.
inline constexpr Symbol kPatternSentinel = (Symbol{1} << 31) - 2;

constexpr bool is_sentinel(Symbol s) noexcept {
  return s == kTextSentinel || s == kPatternSentinel;
}

/// A count that is either exact or known to exceed a cap (std::nullopt).
using BoundedCount = std::optional<std::size_t>;

/// Sequence of integer symbol codes. Immutable after construction.
class SymbolString {
 public:
  SymbolString() = default;
  explicit SymbolString(std::vector<Symbol> symbols,
                        std::optional<std::size_t> alphabet_hint = std::nullopt)
      : symbols_(std::move(symbols)), alphabet_hint_(alphabet_hint) {}

  /// One symbol per byte, code = byte value.
  static SymbolString from_bytes(std::string_view bytes);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  SymbolView view() const noexcept { return symbols_; }
  operator SymbolView() const noexcept { return symbols_; }  // NOLINT

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> alphabet_hint() const noexcept { return alphabet_hint_; }

  bool operator==(const SymbolString& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::optional<std::size_t> alphabet_hint_;
};

/// Maximal block of equal symbols.
struct Run {
  Symbol symbol = 0;
  std::size_t start = 0;
  std::size_t length = 0;

  std::size_t last() const noexcept { return start + length - 1; }
  bool operator==(const Run&) const = default;
};

/// Run-length view of a string plus a per-symbol index of its runs.
class RleView {
 public:
  explicit RleView(SymbolView s);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  /// Runs of `c` in order of position; empty when `c` does not occur.
  const std::vector<Run>& runs_of(Symbol c) const;
  const std::unordered_map<Symbol, std::vector<Run>>& by_symbol() const noexcept {
    return by_symbol_;
  }

 private:
  std::vector<Run> runs_;
  std::unordered_map<Symbol, std::vector<Run>> by_symbol_;
};

/// Number of positions where `a` and `b` differ. Throws on length mismatch.
std::size_t hamming(SymbolView a, SymbolView b);

std::size_t runs_count(SymbolView s) noexcept;

/// Residue-class subsequence s[i] s[i+ell] s[i+2 ell] ...
SymbolString subsample(SymbolView s, std::size_t ell, std::size_t i);

/// Sum of the run counts of the `ell` residue-class subsequences.
std::size_t runs_ell(SymbolView s, std::size_t ell);

/// Concatenation of all residue-class subsequences, class 0 first.
SymbolString ell_encoding(SymbolView s, std::size_t ell);

/// Mismatches between s[pi..] and s[..|s|-1-pi], or nullopt once more than
/// `cap` are seen. Minimality of the period is not required.
BoundedCount x_period_distance(SymbolView s, std::size_t pi, std::size_t cap);

}  // namespace kmm
