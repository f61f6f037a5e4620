#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

namespace kmm {

/// Dense row-major boolean matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool at(std::size_t r, std::size_t c) const noexcept { return cells_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) noexcept { cells_[r * cols_ + c] = v; }

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Reads one row per line of whitespace-separated 0/1 values.
/// Throws std::invalid_argument on ragged rows or values other than 0/1.
BoolMatrix read_bool_matrix(std::istream& in);
void write_bool_matrix(std::ostream& out, const BoolMatrix& m);

}  // namespace kmm
