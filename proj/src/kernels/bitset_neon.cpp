#include <arm_neon.h>

#include "repairaf/kernels.hpp"

namespace repairaf::simd {
namespace {

constexpr std::size_t kLanes = 2;  // 64-bit words per 128-bit register

void and_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) vst1q_u64(dst + k, vandq_u64(vld1q_u64(a + k), vld1q_u64(b + k)));
  for (; k < n; ++k) dst[k] = a[k] & b[k];
}

void or_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) vst1q_u64(dst + k, vorrq_u64(vld1q_u64(a + k), vld1q_u64(b + k)));
  for (; k < n; ++k) dst[k] = a[k] | b[k];
}

void andnot_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  // vbicq(x, y) computes x & ~y
  for (; k + kLanes <= n; k += kLanes) vst1q_u64(dst + k, vbicq_u64(vld1q_u64(a + k), vld1q_u64(b + k)));
  for (; k < n; ++k) dst[k] = a[k] & ~b[k];
}

inline bool nonzero(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }

bool intersects(const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    if (nonzero(vandq_u64(vld1q_u64(a + k), vld1q_u64(b + k)))) return true;
  }
  for (; k < n; ++k) {
    if (a[k] & b[k]) return true;
  }
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    if (nonzero(vbicq_u64(vld1q_u64(a + k), vld1q_u64(b + k)))) return false;
  }
  for (; k < n; ++k) {
    if (a[k] & ~b[k]) return false;
  }
  return true;
}

bool any(const Word* a, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    if (nonzero(vld1q_u64(a + k))) return true;
  }
  for (; k < n; ++k) {
    if (a[k]) return true;
  }
  return false;
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + k)));
    total += vaddvq_u8(bytes);
  }
  for (; k < n; ++k) total += static_cast<std::size_t>(__builtin_popcountll(a[k]));
  return total;
}

constexpr BitsetKernels kNeon{Isa::Neon, and_words,  or_words, andnot_words,
                              intersects, is_subset,  any,      popcount};

}  // namespace

namespace detail {
const BitsetKernels* neon_kernels() { return &kNeon; }
}  // namespace detail

}  // namespace repairaf::simd
