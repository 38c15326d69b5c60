#include "spg/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "spg/error.hpp"

namespace spg {

EnumOutcome for_each_active_candidate(const std::vector<std::vector<FaceSet>>& collections,
                                      int max_size, size_t max_candidates,
                                      const std::function<bool(const FaceSet&)>& visit) {
  std::unordered_set<Bits, BitsHash> seen;
  EnumOutcome outcome = EnumOutcome::Exhausted;
  for (const auto& collection : collections) {
    for (const auto& member : collection) {
      bool stop = false;
      for_each_subset(member, max_size, [&](const Bits& f) {
        if (stop) return;
        if (!seen.insert(f).second) return;
        if (seen.size() > max_candidates) {
          outcome = EnumOutcome::BudgetStopped;
          stop = true;
          return;
        }
        if (!visit(f)) {
          outcome = EnumOutcome::VisitorStopped;
          stop = true;
        }
      });
      if (stop) return outcome;
    }
  }
  return outcome;
}

std::vector<FaceSet> enumerate_active_candidates(const LayerFamily& family, int max_size,
                                                 size_t max_candidates) {
  std::vector<FaceSet> out;
  auto outcome = for_each_active_candidate(family.layers, max_size, max_candidates,
                                           [&](const FaceSet& f) {
                                             out.push_back(f);
                                             return true;
                                           });
  if (outcome == EnumOutcome::BudgetStopped)
    fail(Errc::BudgetExceeded, "active-candidate enumeration exceeded the budget");
  std::sort(out.begin(), out.end(),
            [](const Bits& a, const Bits& b) { return a.canonical_less(b); });
  return out;
}

std::vector<FaceSet> all_k_subsets(int n, int k) {
  std::vector<FaceSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    Bits b;
    for (int i : idx) b.set(i);
    out.push_back(b);
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace spg
