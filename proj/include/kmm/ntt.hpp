#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kmm::ntt {

/// 2^64 - 2^32 + 1; supports transforms up to length 2^32.
inline constexpr std::uint64_t kModulus = 0xFFFFFFFF00000001ULL;

/// In-place number-theoretic transform; size must be a power of two.
void transform(std::vector<std::uint64_t>& a, bool inverse);

/// Exact linear convolution of signed integer sequences, valid while every
/// output magnitude stays below kModulus / 2.
std::vector<std::int64_t> convolve(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b);

}  // namespace kmm::ntt
