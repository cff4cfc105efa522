// bitset.hpp -- fixed-capacity dynamic bitset used for vertex sets and adjacency rows.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace satlab {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static Bitset full(int bits) {
    Bitset b(bits);
    for (auto& w : b.words_) w = ~0ULL;
    b.trim();
    return b;
  }

  int capacity() const { return bits_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
  void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
  void clear() { for (auto& w : words_) w = 0; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // set difference
  Bitset& operator-=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const { return words_ == o.words_; }

  // index of the first set bit, or -1
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }
  // index of the first set bit strictly after `i`, or -1
  int next(int i) const {
    ++i;
    if (i >= bits_) return -1;
    size_t wi = i >> 6;
    uint64_t w = words_[wi] & (~0ULL << (i & 63));
    while (true) {
      if (w) return int(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        f(int(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  const uint64_t* data() const { return words_.data(); }
  size_t word_count() const { return words_.size(); }

 private:
  void trim() {
    if (bits_ & 63) words_.back() &= ~0ULL >> (64 - (bits_ & 63));
    if (bits_ == 0 && !words_.empty()) words_.back() = 0;
  }

  int bits_ = 0;
  std::vector<uint64_t> words_;
};

// |a ∩ b| without materializing the intersection
inline int intersection_count(const Bitset& a, const Bitset& b) {
  int c = 0;
  for (size_t i = 0; i < a.word_count(); ++i)
    c += std::popcount(a.data()[i] & b.data()[i]);
  return c;
}

inline bool intersection_at_least(const Bitset& a, const Bitset& b, int k) {
  int c = 0;
  for (size_t i = 0; i < a.word_count(); ++i) {
    c += std::popcount(a.data()[i] & b.data()[i]);
    if (c >= k) return true;
  }
  return c >= k;
}

}  // namespace satlab
