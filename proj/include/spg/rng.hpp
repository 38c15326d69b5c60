#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace spg {

/// Deterministic RNG. mt19937_64 is fully specified by the standard and the
/// bounded draw below avoids the implementation-defined distributions, so the
/// same seed reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : base_(seed), gen_(mix(seed)) {}

  uint64_t next() { return gen_(); }

  /// Uniform in [0, bound), rejection-sampled to stay unbiased.
  uint64_t below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Independent stream labeled by tag; does not advance this stream.
  Rng fork(std::string_view tag) const {
    uint64_t h = 1469598103934665603ull;
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return Rng(mix(base_ ^ h));
  }
  Rng fork(std::string_view tag, uint64_t index) const {
    Rng r = fork(tag);
    return Rng(mix(r.base_ + 0x9e3779b97f4a7c15ull * (index + 1)));
  }

  /// k distinct values from pool, uniform, order randomized (partial Fisher-Yates).
  std::vector<int> sample(std::vector<int> pool, int k) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k));
    int n = static_cast<int>(pool.size());
    for (int i = 0; i < k; ++i) {
      int j = i + below_int(n - i);
      std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
      out.push_back(pool[static_cast<size_t>(i)]);
    }
    return out;
  }

  uint64_t base_seed() const { return base_; }

 private:
  static uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  uint64_t base_;
  std::mt19937_64 gen_;
};

}  // namespace spg
