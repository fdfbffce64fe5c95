#pragma once

#include <bit>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "repairaf/kernels.hpp"

namespace repairaf {

/// Fixed-universe bitset over argument indices [0, universe).
/// Bulk operations go through the runtime-selected SIMD kernels.
class ArgSet {
 public:
  using Word = simd::Word;
  static constexpr std::size_t kWordBits = 64;

  ArgSet() = default;
  explicit ArgSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static ArgSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  bool empty() const;
  std::size_t count() const;

  ArgSet& operator|=(const ArgSet& other);
  ArgSet& operator&=(const ArgSet& other);
  /// Removes every member of `other`.
  ArgSet& subtract(const ArgSet& other);

  bool intersects(const ArgSet& other) const;
  bool is_subset_of(const ArgSet& other) const;

  std::optional<std::size_t> first() const;
  std::vector<std::size_t> indices() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ArgSet&, const ArgSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace repairaf
