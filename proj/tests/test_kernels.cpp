#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "repairaf/kernels.hpp"

using namespace repairaf::simd;

namespace {

std::vector<Word> random_words(testsupport::Rng& rng, std::size_t n, int density) {
  std::vector<Word> out(n);
  for (auto& w : out) {
    // mix dense, sparse and empty words so the early-exit paths get exercised
    switch (density) {
      case 0: w = 0; break;
      case 1: w = rng.next() & rng.next() & rng.next(); break;
      default: w = rng.next(); break;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar is always available and listed first") {
    auto isas = available_isas();
    REQUIRE_FALSE(isas.empty());
    CHECK(isas.front() == Isa::Scalar);
    CHECK(isa_available(Isa::Scalar));
    CHECK(kernels_for(Isa::Scalar).isa == Isa::Scalar);
  }

  TEST_CASE("unavailable variants throw") {
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
      if (!isa_available(isa)) CHECK_THROWS_AS(kernels_for(isa), std::invalid_argument);
    }
  }

  TEST_CASE("active kernels are one of the available variants") {
    auto isas = available_isas();
    Isa active = active_kernels().isa;
    CHECK(std::find(isas.begin(), isas.end(), active) != isas.end());
  }

  TEST_CASE("scalar reference on hand-picked words") {
    const auto& k = scalar_kernels();
    std::vector<Word> a = {0b1100, 0, ~Word{0}};
    std::vector<Word> b = {0b1010, 1, ~Word{0}};
    std::vector<Word> d(3);
    k.and_words(d.data(), a.data(), b.data(), 3);
    CHECK(d == std::vector<Word>{0b1000, 0, ~Word{0}});
    k.or_words(d.data(), a.data(), b.data(), 3);
    CHECK(d == std::vector<Word>{0b1110, 1, ~Word{0}});
    k.andnot_words(d.data(), a.data(), b.data(), 3);
    CHECK(d == std::vector<Word>{0b0100, 0, 0});
    CHECK(k.intersects(a.data(), b.data(), 3));
    CHECK_FALSE(k.intersects(a.data() + 1, a.data() + 1, 1));
    CHECK(k.popcount(a.data(), 3) == 66);
    CHECK_FALSE(k.any(a.data() + 1, 1));
    CHECK(k.is_subset(d.data(), a.data(), 3));
    CHECK_FALSE(k.is_subset(b.data(), a.data(), 3));
    CHECK(k.popcount(a.data(), 0) == 0);
    CHECK(k.is_subset(a.data(), b.data(), 0));
  }

  TEST_CASE("every variant matches the scalar reference") {
    const auto& ref = scalar_kernels();
    testsupport::Rng rng(0x5eed);
    for (Isa isa : available_isas()) {
      const auto& k = kernels_for(isa);
      CAPTURE(to_string(isa));
      // lengths straddle the 4-word AVX2 and 2-word NEON strides
      for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 17u, 33u}) {
        for (int trial = 0; trial < 40; ++trial) {
          auto a = random_words(rng, n, trial % 3);
          auto b = random_words(rng, n, (trial / 3) % 3);
          if (trial % 5 == 0) b = a;  // equal operands
          if (trial % 7 == 0) {       // a ⊆ b
            for (std::size_t i = 0; i < n; ++i) a[i] &= b[i];
          }
          std::vector<Word> x(n), y(n);
          ref.and_words(x.data(), a.data(), b.data(), n);
          k.and_words(y.data(), a.data(), b.data(), n);
          CHECK(x == y);
          ref.or_words(x.data(), a.data(), b.data(), n);
          k.or_words(y.data(), a.data(), b.data(), n);
          CHECK(x == y);
          ref.andnot_words(x.data(), a.data(), b.data(), n);
          k.andnot_words(y.data(), a.data(), b.data(), n);
          CHECK(x == y);
          CHECK(ref.intersects(a.data(), b.data(), n) == k.intersects(a.data(), b.data(), n));
          CHECK(ref.is_subset(a.data(), b.data(), n) == k.is_subset(a.data(), b.data(), n));
          CHECK(ref.is_subset(b.data(), a.data(), n) == k.is_subset(b.data(), a.data(), n));
          CHECK(ref.any(a.data(), n) == k.any(a.data(), n));
          CHECK(ref.popcount(a.data(), n) == k.popcount(a.data(), n));
        }
      }
    }
  }

  TEST_CASE("in-place operation with aliased destination") {
    testsupport::Rng rng(7);
    for (Isa isa : available_isas()) {
      const auto& k = kernels_for(isa);
      auto a = random_words(rng, 9, 2);
      auto b = random_words(rng, 9, 2);
      auto expect = a;
      scalar_kernels().andnot_words(expect.data(), a.data(), b.data(), 9);
      k.andnot_words(a.data(), a.data(), b.data(), 9);
      CHECK(a == expect);
    }
  }
}
