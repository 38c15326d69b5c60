#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "spg/universe.hpp"

namespace spg {

/// Sorted index from (d-1)-subsets to the member sets containing them.
/// Containment of a (d-1)-sized query in a d-set collection is a single
/// binary search.
struct ChildIndex {
  std::vector<Bits> child;
  std::vector<int32_t> offsets;
  std::vector<int32_t> members;

  static ChildIndex build(const std::vector<FaceSet>& collection) {
    struct Entry {
      Bits child;
      int32_t member;
    };
    std::vector<Entry> entries;
    entries.reserve(collection.size() * 8);
    for (size_t i = 0; i < collection.size(); ++i) {
      collection[i].for_each([&](int slot) {
        Bits c = collection[i];
        c.reset(slot);
        entries.push_back({c, static_cast<int32_t>(i)});
      });
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      if (!(a.child == b.child)) return a.child.word_less(b.child);
      return a.member < b.member;
    });
    ChildIndex ix;
    ix.offsets.push_back(0);
    for (size_t i = 0; i < entries.size();) {
      size_t j = i;
      while (j < entries.size() && entries[j].child == entries[i].child) ++j;
      ix.child.push_back(entries[i].child);
      for (size_t k = i; k < j; ++k) ix.members.push_back(entries[k].member);
      ix.offsets.push_back(static_cast<int32_t>(ix.members.size()));
      i = j;
    }
    return ix;
  }

  std::span<const int32_t> containers(const Bits& c) const {
    auto it = std::lower_bound(child.begin(), child.end(), c,
                               [](const Bits& a, const Bits& b) { return a.word_less(b); });
    if (it == child.end() || !(*it == c)) return {};
    size_t i = static_cast<size_t>(it - child.begin());
    return {members.data() + offsets[i], members.data() + offsets[i + 1]};
  }

  int count(const Bits& c) const { return static_cast<int>(containers(c).size()); }
};

}  // namespace spg
