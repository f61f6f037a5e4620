#include "kmm/bool_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace kmm {

BoolMatrix read_bool_matrix(std::istream& in) {
  std::vector<std::vector<bool>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<bool> row;
    int v = 0;
    while (ls >> v) {
      if (v != 0 && v != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
      row.push_back(v == 1);
    }
    if (!ls.eof()) throw std::invalid_argument("malformed matrix row: " + line);
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("ragged matrix rows");
    }
    rows.push_back(std::move(row));
  }
  BoolMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void write_bool_matrix(std::ostream& out, const BoolMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << (m.at(r, c) ? 1 : 0);
    }
    out << '\n';
  }
}

}  // namespace kmm
