#include <cstdlib>
#include <stdexcept>
#include <string>

#include "repairaf/kernels.hpp"

namespace repairaf::simd {

namespace detail {
#ifndef REPAIRAF_HAVE_AVX2
const BitsetKernels* avx2_kernels() { return nullptr; }
#endif
#ifndef REPAIRAF_HAVE_NEON
const BitsetKernels* neon_kernels() { return nullptr; }
#endif
}  // namespace detail

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

namespace {

bool cpu_has_avx2() {
#if defined(REPAIRAF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const BitsetKernels& select_kernels() {
  if (const char* forced = std::getenv("REPAIRAF_ISA")) {
    std::string name(forced);
    for (Isa isa : available_isas()) {
      if (to_string(isa) == name) return kernels_for(isa);
    }
  }
  return kernels_for(available_isas().back());
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return detail::avx2_kernels() != nullptr && cpu_has_avx2();
    case Isa::Neon: return detail::neon_kernels() != nullptr;
  }
  return false;
}

const BitsetKernels& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("bitset kernels unavailable on this host: " +
                                std::string(to_string(isa)));
  }
  switch (isa) {
    case Isa::Avx2: return *detail::avx2_kernels();
    case Isa::Neon: return *detail::neon_kernels();
    case Isa::Scalar: break;
  }
  return scalar_kernels();
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

const BitsetKernels& active_kernels() {
  static const BitsetKernels& chosen = select_kernels();
  return chosen;
}

}  // namespace repairaf::simd
