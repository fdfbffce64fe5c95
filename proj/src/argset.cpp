#include "repairaf/argset.hpp"

#include <cassert>

namespace repairaf {

ArgSet ArgSet::full(std::size_t universe) {
  ArgSet out(universe);
  for (auto& w : out.words_) w = ~Word{0};
  if (std::size_t tail = universe % kWordBits; tail != 0) {
    out.words_.back() = (Word{1} << tail) - 1;
  }
  return out;
}

bool ArgSet::empty() const { return !simd::active_kernels().any(words_.data(), words_.size()); }

std::size_t ArgSet::count() const {
  return simd::active_kernels().popcount(words_.data(), words_.size());
}

ArgSet& ArgSet::operator|=(const ArgSet& other) {
  assert(universe_ == other.universe_);
  simd::active_kernels().or_words(words_.data(), words_.data(), other.words_.data(), words_.size());
  return *this;
}

ArgSet& ArgSet::operator&=(const ArgSet& other) {
  assert(universe_ == other.universe_);
  simd::active_kernels().and_words(words_.data(), words_.data(), other.words_.data(), words_.size());
  return *this;
}

ArgSet& ArgSet::subtract(const ArgSet& other) {
  assert(universe_ == other.universe_);
  simd::active_kernels().andnot_words(words_.data(), words_.data(), other.words_.data(),
                                      words_.size());
  return *this;
}

bool ArgSet::intersects(const ArgSet& other) const {
  assert(universe_ == other.universe_);
  return simd::active_kernels().intersects(words_.data(), other.words_.data(), words_.size());
}

bool ArgSet::is_subset_of(const ArgSet& other) const {
  assert(universe_ == other.universe_);
  return simd::active_kernels().is_subset(words_.data(), other.words_.data(), words_.size());
}

std::optional<std::size_t> ArgSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> ArgSet::indices() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace repairaf
