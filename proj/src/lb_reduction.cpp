#include "kmm/lb_reduction.hpp"

#include <stdexcept>
#include <string>

namespace kmm::lb {

std::size_t LbInstance::alignment(std::size_t i, std::size_t j) const noexcept {
  return cols * cols + i * (cols + 1) - j * cols;
}

std::size_t LbInstance::aligned_pairs(std::size_t alpha) const noexcept {
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) pairs += alignment(i, j) == alpha;
  }
  return pairs;
}

std::size_t LbInstance::baseline(std::size_t alpha) const {
  if (alpha + pattern.size() > text.size()) throw std::out_of_range("baseline: bad alignment");
  std::size_t pad_matches = 0;
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    pad_matches += pattern[j] == pad && text[alpha + j] == pad;
  }
  return pattern.size() - pad_matches;
}

LbInstance encode(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  if (b.rows() != inner) throw std::invalid_argument("lb::encode: inner dimensions differ");
  if (!(rows >= cols && cols >= inner && inner >= 1)) {
    throw std::invalid_argument("lb::encode: need M' >= M >= N >= 1");
  }
  LbInstance inst;
  inst.rows = rows;
  inst.inner = inner;
  inst.cols = cols;
  inst.pad = 0;
  inst.zero_text = static_cast<Symbol>(inner + 1);
  inst.zero_pattern = static_cast<Symbol>(inner + 2);

  std::vector<Symbol> t(cols * cols, inst.pad);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i) t.insert(t.end(), cols - inner + 1, inst.pad);
    for (std::size_t j = 0; j < inner; ++j) {
      t.push_back(a.at(i, j) ? static_cast<Symbol>(j + 1) : inst.zero_text);
    }
  }
  t.insert(t.end(), cols * cols, inst.pad);

  std::vector<Symbol> p;
  for (std::size_t j = 0; j < cols; ++j) {
    if (j) p.insert(p.end(), cols - inner, inst.pad);
    for (std::size_t i = 0; i < inner; ++i) {
      p.push_back(b.at(i, j) ? static_cast<Symbol>(i + 1) : inst.zero_pattern);
    }
  }
  inst.text = SymbolString(std::move(t), inner + 3);
  inst.pattern = SymbolString(std::move(p), inner + 3);
  return inst;
}

BoolMatrix decode(const LbInstance& inst, const DistanceReport& distances) {
  BoolMatrix c(inst.rows, inst.cols);
  for (std::size_t i = 0; i < inst.rows; ++i) {
    for (std::size_t j = 0; j < inst.cols; ++j) {
      const std::size_t alpha = inst.alignment(i, j);
      if (alpha >= distances.size() || !distances.entries[alpha]) {
        throw std::invalid_argument("lb::decode: missing distance for alignment " +
                                    std::to_string(alpha));
      }
      c.set(i, j, *distances.entries[alpha] < inst.baseline(alpha));
    }
  }
  return c;
}

}  // namespace kmm::lb
