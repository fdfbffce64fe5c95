#pragma once

// Word-level bitset kernels used by the argumentation search.
//
// Every kernel has a portable scalar reference version; SIMD variants are
// compiled when the toolchain supports them and picked at runtime from the
// host CPU. All variants must agree bit-for-bit with the scalar ones.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace repairaf::simd {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

struct BitsetKernels {
  Isa isa;
  // dst[k] = a[k] & b[k]; dst may alias a or b.
  void (*and_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst[k] = a[k] | b[k]
  void (*or_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst[k] = a[k] & ~b[k]
  void (*andnot_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  // a is a subset of b
  bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
  bool (*any)(const Word* a, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
};

const BitsetKernels& scalar_kernels();

/// True when the variant is compiled in and the host CPU can run it.
bool isa_available(Isa isa);

/// Kernels for one instruction set. Throws std::invalid_argument when that
/// variant is unavailable on this host.
const BitsetKernels& kernels_for(Isa isa);

/// Every available variant, scalar first.
std::vector<Isa> available_isas();

/// The variant used by ArgSet. Chosen once on first use: the best available
/// variant, unless REPAIRAF_ISA=scalar|avx2|neon asks for another.
const BitsetKernels& active_kernels();

namespace detail {
const BitsetKernels* avx2_kernels();
const BitsetKernels* neon_kernels();
}  // namespace detail

}  // namespace repairaf::simd
