#ifndef RELCALC_DENSE_SET_HPP
#define RELCALC_DENSE_SET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace relcalc {

// Set of indices 0..size-1 packed into 64-bit words.
// Bits above size are kept zero so whole-word ops stay exact.
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & std::uint64_t(1);
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  DenseSet& operator|=(const DenseSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  DenseSet& operator&=(const DenseSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  bool operator==(const DenseSet& o) const = default;

  bool subset_of(const DenseSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::size_t(__builtin_popcountll(w));
    return n;
  }

  // Visits set bits in increasing order.
  template <typename F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        std::size_t b = std::size_t(__builtin_ctzll(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace relcalc

#endif
