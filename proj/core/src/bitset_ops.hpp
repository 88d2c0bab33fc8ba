#pragma once

#include <bit>
#include <cstdint>
#include <span>

namespace ramsey::detail {

inline bool any(std::span<const std::uint64_t> a) {
  for (auto w : a) {
    if (w != 0) return true;
  }
  return false;
}

inline std::size_t count(std::span<const std::uint64_t> a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline void set_bit(std::span<std::uint64_t> a, std::size_t i) {
  a[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void clear_bit(std::span<std::uint64_t> a, std::size_t i) {
  a[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline void and_into(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
                     std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = a[w] & b[w];
}

inline void andnot_into(std::span<std::uint64_t> out, std::span<const std::uint64_t> a,
                        std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = a[w] & ~b[w];
}

/// Lowest set bit index at or after word `from_word`, or -1.
inline std::int64_t first_bit(std::span<const std::uint64_t> a, std::size_t from_word = 0) {
  for (std::size_t w = from_word; w < a.size(); ++w) {
    if (a[w] != 0) return static_cast<std::int64_t>(w * 64 + std::countr_zero(a[w]));
  }
  return -1;
}

inline std::int64_t last_bit(std::span<const std::uint64_t> a) {
  for (std::size_t w = a.size(); w-- > 0;) {
    if (a[w] != 0) return static_cast<std::int64_t>(w * 64 + 63 - std::countl_zero(a[w]));
  }
  return -1;
}

/// Calls f(i) for each set bit in ascending order.
template <typename F>
void for_each_bit(std::span<const std::uint64_t> a, F&& f) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t bits = a[w];
    while (bits != 0) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

}  // namespace ramsey::detail
