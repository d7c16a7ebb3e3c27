#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tourpaths {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

namespace bits {

constexpr std::size_t words_for(std::size_t n) noexcept { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> w, std::size_t i) noexcept {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set(std::span<Word> w, std::size_t i) noexcept { w[i / kWordBits] |= Word{1} << (i % kWordBits); }

inline void reset(std::span<Word> w, std::size_t i) noexcept {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> a) noexcept {
  std::size_t c = 0;
  for (Word x : a) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline std::size_t count_and3(std::span<const Word> a, std::span<const Word> b,
                              std::span<const Word> c) noexcept {
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += static_cast<std::size_t>(std::popcount(a[i] & b[i] & c[i]));
  return r;
}

inline std::size_t count_or(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] | b[i]));
  return c;
}

/// Calls f(index) for every set bit of a & mask, in increasing order.
template <class F>
void for_each_and(std::span<const Word> a, std::span<const Word> mask, F&& f) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    Word x = a[w] & mask[w];
    while (x) {
      f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

/// Calls f(index) for every set bit of mask & ~a, in increasing order.
template <class F>
void for_each_andnot(std::span<const Word> a, std::span<const Word> mask, F&& f) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    Word x = ~a[w] & mask[w];
    while (x) {
      f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

/// In-place transpose of a 64x64 bit block: bit c of word r moves to bit r of word c.
inline void transpose64(std::array<Word, 64>& m) noexcept {
  Word mask = 0x00000000FFFFFFFFull;
  for (std::size_t j = 32; j != 0; j >>= 1, mask ^= (mask << j)) {
    for (std::size_t k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      const Word t = ((m[k] >> j) ^ m[k | j]) & mask;
      m[k] ^= t << j;
      m[k | j] ^= t;
    }
  }
}

}  // namespace bits

/// Membership mask over the vertices of a host tournament.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t universe) : universe_(universe), words_(bits::words_for(universe), 0) {}

  void insert(std::size_t v) noexcept { bits::set(words_, v); }
  void erase(std::size_t v) noexcept { bits::reset(words_, v); }
  bool contains(std::size_t v) const noexcept { return bits::test(words_, v); }
  std::size_t count() const noexcept { return bits::count(words_); }
  std::size_t universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace tourpaths
