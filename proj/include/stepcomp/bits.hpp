#pragma once

#include <bit>
#include <cstdint>
#include <span>

namespace stepcomp::bits {

inline constexpr int kWordBits = 64;

constexpr int words_for(int bit_count) {
  return (bit_count + kWordBits - 1) / kWordBits;
}

/// Mask with the low `k` bits set, valid for 0 <= k <= 64.
constexpr std::uint64_t low_mask(int k) {
  return k >= kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

constexpr bool test(std::span<const std::uint64_t> row, int bit) {
  return (row[bit / kWordBits] >> (bit % kWordBits)) & 1;
}

constexpr void set(std::span<std::uint64_t> row, int bit) {
  row[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
}

inline int popcount(std::span<const std::uint64_t> row) {
  int total = 0;
  for (std::uint64_t word : row) total += std::popcount(word);
  return total;
}

inline bool intersects(std::span<const std::uint64_t> a,
                       std::span<const std::uint64_t> b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & b[k]) return true;
  return false;
}

inline bool is_zero(std::span<const std::uint64_t> row) {
  for (std::uint64_t word : row)
    if (word) return false;
  return true;
}

/// Calls `fn(index)` for every set bit, in ascending order.
template <typename Fn>
void for_each(std::span<const std::uint64_t> row, Fn&& fn) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    std::uint64_t word = row[k];
    while (word) {
      int b = std::countr_zero(word);
      fn(static_cast<int>(k) * kWordBits + b);
      word &= word - 1;
    }
  }
}

template <typename Fn>
void for_each_word(std::uint64_t word, Fn&& fn) {
  while (word) {
    fn(std::countr_zero(word));
    word &= word - 1;
  }
}

}  // namespace stepcomp::bits
