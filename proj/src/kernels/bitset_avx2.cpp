// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include "repairaf/kernels.hpp"

namespace repairaf::simd {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per 256-bit register

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void and_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) store(dst + k, _mm256_and_si256(load(a + k), load(b + k)));
  for (; k < n; ++k) dst[k] = a[k] & b[k];
}

void or_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) store(dst + k, _mm256_or_si256(load(a + k), load(b + k)));
  for (; k < n; ++k) dst[k] = a[k] | b[k];
}

void andnot_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; k + kLanes <= n; k += kLanes)
    store(dst + k, _mm256_andnot_si256(load(b + k), load(a + k)));
  for (; k < n; ++k) dst[k] = a[k] & ~b[k];
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    __m256i va = load(a + k);
    if (!_mm256_testz_si256(va, load(b + k))) return true;
  }
  for (; k < n; ++k) {
    if (a[k] & b[k]) return true;
  }
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + k), load(a + k))) return false;
  }
  for (; k < n; ++k) {
    if (a[k] & ~b[k]) return false;
  }
  return true;
}

bool any(const Word* a, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    __m256i va = load(a + k);
    if (!_mm256_testz_si256(va, va)) return true;
  }
  for (; k < n; ++k) {
    if (a[k]) return true;
  }
  return false;
}

// Nibble-table popcount: per-byte counts via pshufb, summed with psadbw.
std::size_t popcount(const Word* a, std::size_t n) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    __m256i v = load(a + k);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < n; ++k) total += static_cast<std::size_t>(_mm_popcnt_u64(a[k]));
  return total;
}

constexpr BitsetKernels kAvx2{Isa::Avx2, and_words,  or_words, andnot_words,
                              intersects, is_subset,  any,      popcount};

}  // namespace

namespace detail {
const BitsetKernels* avx2_kernels() { return &kAvx2; }
}  // namespace detail

}  // namespace repairaf::simd
