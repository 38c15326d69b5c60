#pragma once

// Brute-force reference implementations of every property, enumerating all
// subsets of the symbol space directly. Independent of the library checkers;
// only definitions are used.

#include <deque>
#include <optional>
#include <vector>

#include "spg/family.hpp"
#include "spg/ops.hpp"

namespace spg::oracle {

inline std::vector<Bits> all_subsets(int slots) {
  std::vector<Bits> out;
  out.reserve(size_t{1} << slots);
  for (uint32_t mask = 0; mask < (uint32_t{1} << slots); ++mask) {
    Bits b;
    for (int i = 0; i < slots; ++i)
      if ((mask >> i) & 1) b.set(i);
    out.push_back(b);
  }
  return out;
}

inline std::vector<FaceSet> flatten_members(const std::vector<std::vector<FaceSet>>& cols) {
  std::vector<FaceSet> out;
  for (const auto& c : cols) out.insert(out.end(), c.begin(), c.end());
  return out;
}

inline bool connected_subgraph(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& keep) {
  if (keep.size() <= 1) return true;
  std::vector<char> in(adj.size(), 0), seen(adj.size(), 0);
  for (int v : keep) in[static_cast<size_t>(v)] = 1;
  std::deque<int> q{keep[0]};
  seen[static_cast<size_t>(keep[0])] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[static_cast<size_t>(v)])
      if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        q.push_back(w);
      }
  }
  return reached == keep.size();
}

inline bool dimension_reduction(const SymbolUniverse& u, int d,
                                const std::vector<std::vector<FaceSet>>& cols,
                                const std::vector<std::vector<int>>& adj) {
  for (const auto& f : all_subsets(u.slots())) {
    if (f.count() > d - 1) continue;
    std::vector<int> active;
    for (size_t v = 0; v < cols.size(); ++v)
      for (const auto& m : cols[v])
        if (f.subset_of(m)) {
          active.push_back(static_cast<int>(v));
          break;
        }
    if (!connected_subgraph(adj, active)) return false;
  }
  return true;
}

inline bool endpoint_count(const SymbolUniverse& u, int d, const std::vector<FaceSet>& members) {
  for (const auto& f : all_subsets(u.slots())) {
    if (f.count() != d - 1) continue;
    int cnt = 0;
    for (const auto& m : members)
      if (f.subset_of(m)) ++cnt;
    if (cnt > 2) return false;
  }
  return true;
}

inline bool adjacency(int d, const std::vector<std::vector<FaceSet>>& cols,
                      const std::vector<std::vector<int>>& adj) {
  for (size_t v = 0; v < cols.size(); ++v)
    for (size_t w = v; w < cols.size(); ++w)
      for (const auto& a : cols[v])
        for (const auto& b : cols[w]) {
          if (a == b) continue;
          if ((a & b).count() != d - 1) continue;
          if (v == w) continue;
          bool ok = false;
          for (int x : adj[v])
            if (x == static_cast<int>(w)) ok = true;
          if (!ok) return false;
        }
  return true;
}

inline bool strong_adjacency(int d, const std::vector<std::vector<FaceSet>>& cols,
                             const std::vector<std::vector<int>>& adj,
                             const std::vector<std::pair<int, int>>& edges) {
  if (!adjacency(d, cols, adj)) return false;
  for (auto [v, w] : edges) {
    bool ok = false;
    for (const auto& a : cols[static_cast<size_t>(v)])
      for (const auto& b : cols[static_cast<size_t>(w)])
        if ((a & b).count() == d - 1) ok = true;
    if (!ok) return false;
  }
  return true;
}

inline bool covering(const LayerFamily& fam, int m) {
  for (const auto& c : all_subsets(fam.universe.slots())) {
    if (c.count() > fam.d - 1) continue;
    for (const auto& layer : fam.layers) {
      int cnt = 0;
      for (const auto& e : layer)
        if (c.subset_of(e)) ++cnt;
      if (cnt < m) return false;
    }
  }
  return true;
}

inline bool completeness(const LayerFamily& fam) {
  auto members = flatten_members(fam.layers);
  for (const auto& c : all_subsets(fam.universe.slots())) {
    if (c.count() != fam.d) continue;
    bool found = false;
    for (const auto& m : members)
      if (m == c) found = true;
    if (!found) return false;
  }
  return true;
}

inline bool linkage(const LayerFamily& fam) {
  for (size_t k = 0; k + 1 < fam.layers.size(); ++k) {
    bool ok = false;
    for (const auto& a : fam.layers[k])
      for (const auto& b : fam.layers[k + 1])
        if ((a & b).count() == fam.d - 1) ok = true;
    if (!ok) return false;
  }
  return true;
}

inline bool sectioned_covering(const LayerFamily& fam, int m) {
  const Bits amask = fam.universe.a_mask();
  for (const auto& c : all_subsets(fam.universe.slots())) {
    if (c.count() > fam.d - 1) continue;
    int in_a = (c & amask).count();
    int in_b = c.count() - in_a;
    for (size_t k = 0; k < fam.layers.size(); ++k) {
      int j = fam.sections[k];
      if (in_a > fam.d - j || in_b > j) continue;
      int cnt = 0;
      for (const auto& e : fam.layers[k])
        if (c.subset_of(e)) ++cnt;
      if (cnt < m) return false;
    }
  }
  return true;
}

inline bool width_covering(const LayerFamily& fam) {
  const int dbase = fam.d / 2;
  for (const auto& s : all_subsets(fam.universe.slots())) {
    if (width(fam.universe, s) > dbase - 1) continue;
    for (const auto& layer : fam.layers) {
      bool ok = false;
      for (const auto& e : layer)
        if (s.subset_of(e)) ok = true;
      if (!ok) return false;
    }
  }
  return true;
}

inline bool pseudomanifold(const SymbolUniverse& u, int d, const std::vector<FaceSet>& members) {
  return endpoint_count(u, d, members);
}

inline bool normal(const SymbolUniverse& u, int d, const std::vector<FaceSet>& members) {
  for (const auto& f : all_subsets(u.slots())) {
    if (f.empty() || f.count() > d) continue;
    std::vector<FaceSet> star;
    for (const auto& m : members)
      if (f.subset_of(m)) star.push_back(m);
    if (star.size() <= 1) continue;
    // dual connectivity: facets adjacent when meeting in d-1 symbols
    std::vector<std::vector<int>> adj(star.size());
    for (size_t i = 0; i < star.size(); ++i)
      for (size_t j = i + 1; j < star.size(); ++j)
        if ((star[i] & star[j]).count() == d - 1) {
          adj[i].push_back(static_cast<int>(j));
          adj[j].push_back(static_cast<int>(i));
        }
    std::vector<int> keep(star.size());
    for (size_t i = 0; i < star.size(); ++i) keep[i] = static_cast<int>(i);
    if (!connected_subgraph(adj, keep)) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> path_adjacency(int layers) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(layers));
  for (int i = 0; i + 1 < layers; ++i) {
    adj[static_cast<size_t>(i)].push_back(i + 1);
    adj[static_cast<size_t>(i + 1)].push_back(i);
  }
  return adj;
}

}  // namespace spg::oracle
