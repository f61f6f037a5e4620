#include "kmm/symbols.hpp"

#include <stdexcept>

namespace kmm {

SymbolString SymbolString::from_bytes(std::string_view bytes) {
  std::vector<Symbol> out;
  out.reserve(bytes.size());
  for (char ch : bytes) out.push_back(static_cast<unsigned char>(ch));
  return SymbolString(std::move(out));
}

RleView::RleView(SymbolView s) {
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i + 1;
    while (j < s.size() && s[j] == s[i]) ++j;
    Run run{s[i], i, j - i};
    runs_.push_back(run);
    by_symbol_[run.symbol].push_back(run);
    i = j;
  }
}

const std::vector<Run>& RleView::runs_of(Symbol c) const {
  static const std::vector<Run> kNone;
  auto it = by_symbol_.find(c);
  return it == by_symbol_.end() ? kNone : it->second;
}

std::size_t hamming(SymbolView a, SymbolView b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming: strings differ in length");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t runs_count(SymbolView s) noexcept {
  if (s.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < s.size(); ++i) runs += s[i] != s[i - 1];
  return runs;
}

SymbolString subsample(SymbolView s, std::size_t ell, std::size_t i) {
  if (ell == 0 || i >= ell) {
    throw std::invalid_argument("subsample: residue must satisfy 0 <= i < ell");
  }
  std::vector<Symbol> out;
  out.reserve(s.size() / ell + 1);
  for (std::size_t p = i; p < s.size(); p += ell) out.push_back(s[p]);
  return SymbolString(std::move(out));
}

std::size_t runs_ell(SymbolView s, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("runs_ell: ell must be positive");
  std::size_t runs = 0;
  for (std::size_t i = 0; i < ell && i < s.size(); ++i) {
    runs += runs_count(subsample(s, ell, i));
  }
  return runs;
}

SymbolString ell_encoding(SymbolView s, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("ell_encoding: ell must be positive");
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t p = i; p < s.size(); p += ell) out.push_back(s[p]);
  }
  return SymbolString(std::move(out));
}

BoundedCount x_period_distance(SymbolView s, std::size_t pi, std::size_t cap) {
  if (pi < 1 || pi >= s.size()) {
    throw std::invalid_argument("x_period_distance: shift out of range");
  }
  std::size_t d = 0;
  for (std::size_t j = 0; j + pi < s.size(); ++j) {
    if (s[j + pi] != s[j] && ++d > cap) return std::nullopt;
  }
  return d;
}

}  // namespace kmm
