#pragma once

#include <functional>
#include <vector>

#include "spg/family.hpp"

namespace spg {

/// Every subset of member with size <= max_size (empty set included), each
/// exactly once, in a deterministic order.
template <class F>
void for_each_subset(const Bits& member, int max_size, F f) {
  std::vector<int> slots = member.slots();
  int k = static_cast<int>(slots.size());
  Bits current;
  auto rec = [&](auto&& self, int idx, int size) -> void {
    if (idx == k) {
      f(static_cast<const Bits&>(current));
      return;
    }
    // remaining slots can always be skipped
    self(self, idx + 1, size);
    if (size < max_size) {
      current.set(slots[static_cast<size_t>(idx)]);
      self(self, idx + 1, size + 1);
      current.reset(slots[static_cast<size_t>(idx)]);
    }
  };
  rec(rec, 0, 0);
}

enum class EnumOutcome { Exhausted, BudgetStopped, VisitorStopped };

/// Streams every distinct F with |F| <= max_size contained in at least one
/// member set, each exactly once (first-occurrence order). The visitor
/// returns false to stop early. max_candidates bounds the dedup set.
EnumOutcome for_each_active_candidate(const std::vector<std::vector<FaceSet>>& collections,
                                      int max_size, size_t max_candidates,
                                      const std::function<bool(const FaceSet&)>& visit);

/// Materialized variant, canonically sorted. Throws BudgetExceeded when the
/// distinct-candidate budget is hit.
std::vector<FaceSet> enumerate_active_candidates(const LayerFamily& family, int max_size,
                                                 size_t max_candidates = 2'000'000);

/// All size-k subsets of the base symbols [1..n] as faces, in canonical order.
std::vector<FaceSet> all_k_subsets(int n, int k);

}  // namespace spg
