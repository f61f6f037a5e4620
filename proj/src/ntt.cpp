#include "kmm/ntt.hpp"

#include <stdexcept>
#include <utility>

namespace kmm::ntt {
namespace {

constexpr std::uint64_t kGenerator = 7;

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kModulus);
}

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  // Detect wrap-around past 2^64 as well as overflow past the modulus.
  return (r < a || r >= kModulus) ? r - kModulus : r;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + (kModulus - b); }

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

std::uint64_t encode(std::int64_t v) {
  return v >= 0 ? static_cast<std::uint64_t>(v) : kModulus - static_cast<std::uint64_t>(-v);
}

std::int64_t decode(std::uint64_t v) {
  return v > kModulus / 2 ? -static_cast<std::int64_t>(kModulus - v) : static_cast<std::int64_t>(v);
}

}  // namespace

void transform(std::vector<std::uint64_t>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1))) throw std::invalid_argument("ntt: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t root = power(kGenerator, (kModulus - 1) / len);
    if (inverse) root = power(root, kModulus - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t w = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint64_t u = a[i + j];
        const std::uint64_t v = mul(a[i + j + len / 2], w);
        a[i + j] = add(u, v);
        a[i + j + len / 2] = sub(u, v);
        w = mul(w, root);
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = power(n % kModulus, kModulus - 2);
    for (auto& x : a) x = mul(x, inv_n);
  }
}

std::vector<std::int64_t> convolve(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;
  std::vector<std::uint64_t> fa(n, 0), fb(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = encode(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = encode(b[i]);
  transform(fa, false);
  transform(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] = mul(fa[i], fb[i]);
  transform(fa, true);
  std::vector<std::int64_t> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = decode(fa[i]);
  return out;
}

}  // namespace kmm::ntt
