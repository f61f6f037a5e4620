#pragma once

// Brute-force references. These deliberately share nothing with the fast
// paths except the symbol representation.

#include "kmm/bool_matrix.hpp"
#include "kmm/report.hpp"
#include "kmm/symbols.hpp"

namespace kmm::oracle {

/// O(nm) scan of every alignment. Throws on an empty pattern or a pattern
/// longer than the text.
DistanceReport brute_distances(SymbolView text, SymbolView pattern, std::size_t k);

/// Boolean product (OR of ANDs). Throws on inner-dimension mismatch.
BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b);

}  // namespace kmm::oracle
