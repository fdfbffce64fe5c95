#include <bit>

#include "repairaf/kernels.hpp"

namespace repairaf::simd {
namespace {

void and_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = a[k] & b[k];
}

void or_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = a[k] | b[k];
}

void andnot_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = a[k] & ~b[k];
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] & b[k]) return true;
  }
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] & ~b[k]) return false;
  }
  return true;
}

bool any(const Word* a, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k]) return true;
  }
  return false;
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < n; ++k) total += static_cast<std::size_t>(std::popcount(a[k]));
  return total;
}

constexpr BitsetKernels kScalar{Isa::Scalar, and_words,  or_words, andnot_words,
                                intersects,  is_subset,  any,      popcount};

}  // namespace

const BitsetKernels& scalar_kernels() { return kScalar; }

}  // namespace repairaf::simd
