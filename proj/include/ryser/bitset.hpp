#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ryser {

/// Fixed-width dynamic bitset over a global vertex numbering. All operands of
/// a binary operation must have the same width.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::size_t intersection_count(const Bitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  /// Bits set here and not in `mask`.
  std::size_t count_without(const Bitset& mask) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~mask.words_[i]));
    return c;
  }

  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ryser
