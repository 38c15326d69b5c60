#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace spg {

/// Fixed-width bitset used for every face set. 256 slots cover all desk-scale
/// universes (up to 128 base symbols when doubled).
class Bits {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = 64 * kWords;

  constexpr Bits() = default;

  static Bits single(int i) {
    Bits b;
    b.set(i);
    return b;
  }

  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool subset_of(const Bits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits operator|(const Bits& o) const {
    Bits r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  /// Set difference.
  Bits operator-(const Bits& o) const {
    Bits r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }
  Bits& operator|=(const Bits& o) {
    for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
    return *this;
  }

  bool operator==(const Bits& o) const = default;

  /// Next set slot >= from, or -1.
  int next(int from) const {
    if (from >= kCapacity) return -1;
    int wi = from >> 6;
    uint64_t w = w_[wi] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi == kWords) return -1;
      w = w_[wi];
    }
  }

  template <class F>
  void for_each(F f) const {
    for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
  }

  std::vector<int> slots() const {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  /// Raw word order, suitable for sorting/grouping (not the canonical order).
  bool word_less(const Bits& o) const {
    for (int i = kWords - 1; i >= 0; --i)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  /// Canonical order: lexicographic on the ascending slot sequence.
  bool canonical_less(const Bits& o) const {
    int a = next(0), b = o.next(0);
    while (a >= 0 && b >= 0) {
      if (a != b) return a < b;
      a = next(a + 1);
      b = o.next(b + 1);
    }
    return a < 0 && b >= 0;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : w_) {
      uint64_t x = w + 0x9e3779b97f4a7c15ull;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      h ^= (x ^ (x >> 31)) + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

 private:
  std::array<uint64_t, kWords> w_{};
};

struct BitsHash {
  size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace spg
