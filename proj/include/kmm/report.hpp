#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace kmm {

/// Exact distance, or std::nullopt when it exceeds the budget.
using Distance = std::optional<std::uint32_t>;

/// Per-alignment result of k-mismatch matching: one entry per text position
/// 0 .. n-m. An engaged entry is the exact Hamming distance (and is <= k).
struct DistanceReport {
  std::size_t k = 0;
  std::vector<Distance> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool operator==(const DistanceReport&) const = default;

  /// Builds a report from exact distances, capping entries above `k`.
  template <typename Range>
  static DistanceReport from_exact(const Range& distances, std::size_t k) {
    DistanceReport r;
    r.k = k;
    r.entries.reserve(distances.size());
    for (auto d : distances) {
      r.entries.push_back(static_cast<std::size_t>(d) <= k
                              ? Distance(static_cast<std::uint32_t>(d))
                              : std::nullopt);
    }
    return r;
  }
};

}  // namespace kmm
