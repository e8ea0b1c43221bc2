#pragma once

#include <bit>
#include <cstdint>

namespace nsg::bits {

inline constexpr int kWordBits = 64;

constexpr int words_for(int nbits) { return (nbits + 63) >> 6; }

inline bool test(const std::uint64_t* w, int i) {
  return (w[i >> 6] >> (i & 63)) & 1u;
}

inline void set(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

inline void clear(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

/// Zeroes bits at positions >= nbits in the last word of a words_for(nbits) buffer.
inline void trim(std::uint64_t* w, int nbits) {
  int r = nbits & 63;
  if (r) w[nbits >> 6] &= (std::uint64_t{1} << r) - 1;
}

/// dst |= src << shift, over buffers of words_for(nbits) words. Bits shifted to
/// positions >= nbits may spill into the last word; callers trim() when done.
inline void or_shifted(std::uint64_t* dst, const std::uint64_t* src, int nbits, int shift) {
  int nw = words_for(nbits);
  int off = shift >> 6;
  int r = shift & 63;
  if (r == 0) {
    for (int i = nw - 1 - off; i >= 0; --i) dst[i + off] |= src[i];
  } else {
    for (int i = nw - 1 - off; i >= 0; --i) {
      if (i + off + 1 < nw) dst[i + off + 1] |= src[i] >> (64 - r);
      dst[i + off] |= src[i] << r;
    }
  }
}

/// Number of set bits at positions in [lo, hi).
inline int popcount_range(const std::uint64_t* w, int lo, int hi) {
  if (lo >= hi) return 0;
  int lw = lo >> 6, hw = (hi - 1) >> 6;
  std::uint64_t lmask = ~std::uint64_t{0} << (lo & 63);
  std::uint64_t hmask = (hi & 63) ? (std::uint64_t{1} << (hi & 63)) - 1 : ~std::uint64_t{0};
  if (lw == hw) return std::popcount(w[lw] & lmask & hmask);
  int n = std::popcount(w[lw] & lmask);
  for (int i = lw + 1; i < hw; ++i) n += std::popcount(w[i]);
  return n + std::popcount(w[hw] & hmask);
}

/// Least set position in [from, nbits), or -1.
inline int next_set(const std::uint64_t* w, int from, int nbits) {
  if (from >= nbits) return -1;
  int wi = from >> 6;
  int last = (nbits - 1) >> 6;
  std::uint64_t cur = w[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (cur) {
      int i = (wi << 6) + std::countr_zero(cur);
      return i < nbits ? i : -1;
    }
    if (++wi > last) return -1;
    cur = w[wi];
  }
}

}  // namespace nsg::bits
