#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace dissrho {

/// Fixed-capacity set of vertex indices in [0, 128), stored as two machine words.
class VertexSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr VertexSet() = default;

  /// The set {0, 1, ..., n-1}.
  static constexpr VertexSet prefix(int n) {
    VertexSet s;
    if (n >= 128) {
      s.words_ = {~uint64_t{0}, ~uint64_t{0}};
    } else if (n >= 64) {
      s.words_[0] = ~uint64_t{0};
      s.words_[1] = n == 64 ? 0 : (~uint64_t{0} >> (128 - n));
    } else if (n > 0) {
      s.words_[0] = ~uint64_t{0} >> (64 - n);
    }
    return s;
  }

  static constexpr VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  constexpr void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  constexpr void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  constexpr int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Smallest element, or -1 when empty.
  constexpr int first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  /// Largest element, or -1 when empty.
  constexpr int last() const {
    if (words_[1] != 0) return 127 - std::countl_zero(words_[1]);
    if (words_[0] != 0) return 63 - std::countl_zero(words_[0]);
    return -1;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  constexpr bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  constexpr bool is_subset_of(const VertexSet& o) const { return (*this - o).empty(); }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Orders by the high word first, i.e. as a 128-bit unsigned integer.
  friend constexpr std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

  constexpr uint64_t word(int i) const { return words_[i]; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr iterator(uint64_t lo, uint64_t hi) : lo_(lo), hi_(hi) { advance(); }
    constexpr int operator*() const { return cur_; }
    constexpr iterator& operator++() {
      advance();
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.cur_ == b.cur_; }

   private:
    // Pops the smallest remaining element into cur_.
    constexpr void advance() {
      if (lo_ != 0) {
        cur_ = std::countr_zero(lo_);
        lo_ &= lo_ - 1;
      } else if (hi_ != 0) {
        cur_ = 64 + std::countr_zero(hi_);
        hi_ &= hi_ - 1;
      } else {
        cur_ = -1;
      }
    }

    uint64_t lo_ = 0;
    uint64_t hi_ = 0;
    int cur_ = -1;
  };

  constexpr iterator begin() const { return iterator(words_[0], words_[1]); }
  constexpr iterator end() const { return iterator(); }

 private:
  std::array<uint64_t, 2> words_{};
};

}  // namespace dissrho
