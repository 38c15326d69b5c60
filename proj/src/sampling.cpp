#include "spg/sampling.hpp"

#include <algorithm>

#include "spg/error.hpp"

namespace spg {

std::vector<SeparationViolation> separation_violations(const std::vector<FaceSet>& sets,
                                                       const SeparationThresholds& t) {
  std::vector<SeparationViolation> out;
  const int n = static_cast<int>(sets.size());
  if (t.pairwise_intersection_max) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int v = (sets[static_cast<size_t>(i)] & sets[static_cast<size_t>(j)]).count();
        if (v > *t.pairwise_intersection_max)
          out.push_back({"pairwise-intersection", {i, j}, v, *t.pairwise_intersection_max});
      }
  }
  if (t.pairwise_difference_min) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        int v = (sets[static_cast<size_t>(i)] - sets[static_cast<size_t>(j)]).count();
        if (v < *t.pairwise_difference_min)
          out.push_back({"pairwise-difference", {i, j}, v, *t.pairwise_difference_min});
      }
  }
  if (t.four_union_min && n >= 4) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int e = c + 1; e < n; ++e) {
            int v = (sets[static_cast<size_t>(a)] | sets[static_cast<size_t>(b)] |
                     sets[static_cast<size_t>(c)] | sets[static_cast<size_t>(e)])
                        .count();
            if (v < *t.four_union_min)
              out.push_back({"four-union", {a, b, c, e}, v, *t.four_union_min});
          }
  }
  return out;
}

static void precheck_feasibility(int pool_size, const std::vector<int>& sizes,
                                 const SeparationThresholds& t) {
  for (int s : sizes) {
    if (s < 0 || s > pool_size)
      fail(Errc::Domain, "requested subset size " + std::to_string(s) + " from a pool of " +
                             std::to_string(pool_size));
  }
  if (sizes.size() >= 2) {
    if (t.pairwise_difference_min) {
      int smallest = *std::min_element(sizes.begin(), sizes.end());
      if (smallest < *t.pairwise_difference_min)
        fail(Errc::SeparationInfeasible,
             "pairwise-difference: a set of size " + std::to_string(smallest) +
                 " can never differ from another in >= " + std::to_string(*t.pairwise_difference_min) +
                 " elements");
    }
    if (t.pairwise_intersection_max) {
      if (*t.pairwise_intersection_max < 0)
        fail(Errc::SeparationInfeasible, "pairwise-intersection: bound below zero");
      // |Pi & Pj| >= si + sj - pool by pigeonhole
      std::vector<int> sorted = sizes;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      int forced = sorted[0] + sorted[1] - pool_size;
      if (forced > *t.pairwise_intersection_max)
        fail(Errc::SeparationInfeasible,
             "pairwise-intersection: two sets of sizes " + std::to_string(sorted[0]) + "," +
                 std::to_string(sorted[1]) + " in a pool of " + std::to_string(pool_size) +
                 " always share >= " + std::to_string(forced) + " elements");
    }
  }
  if (t.four_union_min && sizes.size() >= 4 && *t.four_union_min > pool_size)
    fail(Errc::SeparationInfeasible, "four-union: bound exceeds the pool size");
}

std::vector<FaceSet> sample_separated_family(const Bits& slot_pool, const std::vector<int>& sizes,
                                             const SeparationSpec& spec, Rng& rng) {
  std::vector<int> pool = slot_pool.slots();
  precheck_feasibility(static_cast<int>(pool.size()), sizes, spec.thresholds);

  std::vector<SeparationViolation> last;
  for (size_t attempt = 0; attempt < std::max<size_t>(1, spec.retry_budget); ++attempt) {
    std::vector<FaceSet> family;
    family.reserve(sizes.size());
    for (int s : sizes) {
      Bits b;
      for (int slot : rng.sample(pool, s)) b.set(slot);
      family.push_back(b);
    }
    last = separation_violations(family, spec.thresholds);
    if (last.empty()) return family;
  }
  const auto& v = last.front();
  fail(Errc::SeparationInfeasible,
       v.constraint + ": retry budget exhausted (last value " + std::to_string(v.value) +
           " vs bound " + std::to_string(v.bound) + ")");
}

std::vector<FaceSet> sample_separated_family(const SymbolUniverse&, const Bits& slot_pool,
                                             const std::vector<int>& sizes,
                                             const SeparationSpec& spec, uint64_t seed) {
  Rng rng(seed);
  return sample_separated_family(slot_pool, sizes, spec, rng);
}

}  // namespace spg
