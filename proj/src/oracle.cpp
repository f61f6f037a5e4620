#include "kmm/oracle.hpp"

#include <stdexcept>

namespace kmm::oracle {

DistanceReport brute_distances(SymbolView text, SymbolView pattern, std::size_t k) {
  if (pattern.empty()) throw std::invalid_argument("brute_distances: empty pattern");
  if (pattern.size() > text.size()) {
    throw std::invalid_argument("brute_distances: pattern longer than text");
  }
  const std::size_t m = pattern.size();
  DistanceReport report;
  report.k = k;
  report.entries.resize(text.size() - m + 1);
  for (std::size_t i = 0; i + m <= text.size(); ++i) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < m && d <= k; ++j) d += text[i + j] != pattern[j];
    if (d <= k) report.entries[i] = static_cast<std::uint32_t>(d);
  }
  return report;
}

BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("bool_matmul: dimension mismatch");
  BoolMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t t = 0; t < a.cols() && !v; ++t) v = a.at(i, t) && b.at(t, j);
      c.set(i, j, v);
    }
  }
  return c;
}

}  // namespace kmm::oracle
