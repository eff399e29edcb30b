#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ncg {

// Set of integers in [0, size) backed by 64-bit words. Bits outside the
// range are kept at zero so whole-word comparisons stay valid.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_(word_count(size), 0) {
    assert(size >= 0);
  }

  static Bitset all(int size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~uint64_t{0};
    b.mask_tail();
    return b;
  }

  int size() const { return size_; }

  bool test(int i) const {
    assert(i >= 0 && i < size_);
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < size_);
    words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < size_);
    words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w != 0) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  Bitset complemented() const {
    Bitset r(size_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.mask_tail();
    return r;
  }

  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(size_ == o.size_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Lowest set bit, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w != 0) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const Bitset&) const = default;

 private:
  static size_t word_count(int size) { return (static_cast<size_t>(size) + 63) / 64; }

  void mask_tail() {
    int tail = size_ & 63;
    if (tail != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << tail) - 1;
  }

  int size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace ncg
