#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mwss {

/// Hard cap on the number of vertices of any graph handled by the library.
inline constexpr int kMaxVertices = 512;

/// Fixed-width bit set over vertex indices 0..kMaxVertices-1.
///
/// Every subset the algorithms talk about (components, H, Z, the live part of
/// a context, modules) is one of these. Operations are word-parallel.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const VertexSet* set, int v) : set_(set), v_(v) {}
    int operator*() const { return v_; }
    Iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  /// The set {0, ..., n-1}.
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return s;
  }

  static VertexSet from(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest element, or -1 when empty.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  /// Smallest element strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (cur) return w * 64 + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  /// Largest element, or -1 when empty.
  int last() const {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Copy with v removed.
  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }
  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }

  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }

  Iterator begin() const { return {this, first()}; }
  Iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace mwss
