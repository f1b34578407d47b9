#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kdmv {

/// Subset of [0, 512) stored as a fixed bit vector.
///
/// Every graph in the library has at most kMaxVertices vertices, so one
/// fixed-width type serves as neighborhood row, candidate pool, color class
/// and witness. Bits at or above the owning graph's order are kept clear by
/// every producer in the library.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 512;
  static constexpr int kWords = kMaxVertices / 64;

  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    Iterator() = default;
    Iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

    int operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const Iterator& o) const { return pos_ == o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = -1;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) set(v);
  }

  /// {0, ..., n-1}.
  static VertexSet full(int n);
  static VertexSet from(const std::vector<int>& vertices);

  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  bool contains(int v) const { return test(v); }
  void clear() { words_.fill(0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  /// Smallest member, or -1.
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i]) return (i << 6) + std::countr_zero(words_[i]);
    return -1;
  }
  /// Smallest member greater than v, or -1.
  int next(int v) const;

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Total order: the set owning the smallest differing element sorts first.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  Iterator begin() const { return Iterator(this, first()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<int> to_vector() const;
  std::string to_string() const;

  std::uint64_t word(int i) const { return words_[i]; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace kdmv
