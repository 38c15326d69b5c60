#pragma once

#include <vector>

#include "spg/family.hpp"
#include "spg/ops.hpp"
#include "spg/rng.hpp"

namespace spg::test {

inline FaceSet face(const SymbolUniverse& u, const std::vector<int>& symbols) {
  return face_from_symbols(u, symbols);
}

inline FaceSet dface(const SymbolUniverse& u, const std::vector<std::pair<int, int>>& cells) {
  return face_from_cells(u, cells);
}

inline LayerFamily make_family(const SymbolUniverse& u, int d,
                               const std::vector<std::vector<std::vector<int>>>& layers,
                               std::vector<int> sections = {}) {
  LayerFamily f;
  f.universe = u;
  f.d = d;
  for (const auto& layer : layers) {
    std::vector<FaceSet> out;
    for (const auto& member : layer) out.push_back(face(u, member));
    f.layers.push_back(std::move(out));
  }
  f.sections = std::move(sections);
  return f;
}

inline SubsetPartitionGraph make_graph(const SymbolUniverse& u, int d,
                                       const std::vector<std::vector<std::vector<int>>>& vertices,
                                       std::vector<std::pair<int, int>> edges) {
  SubsetPartitionGraph g;
  g.universe = u;
  g.d = d;
  for (const auto& col : vertices) {
    std::vector<FaceSet> out;
    for (const auto& member : col) out.push_back(face(u, member));
    g.vertices.push_back(std::move(out));
  }
  g.edges = std::move(edges);
  g.normalize_edges();
  return g;
}

/// Random k-subset of the universe's base symbols.
inline FaceSet random_face(Rng& rng, const SymbolUniverse& u, int k) {
  FaceSet f;
  std::vector<int> pool(static_cast<size_t>(u.slots()));
  for (int i = 0; i < u.slots(); ++i) pool[static_cast<size_t>(i)] = i;
  for (int s : rng.sample(pool, k)) f.set(s);
  return f;
}

struct RandomFamilyOptions {
  bool doubled = false;
  bool bipartite_sections = false;
};

/// A small random layer family: distinct d-sets split into nonempty layers.
inline LayerFamily random_family(Rng& rng, const RandomFamilyOptions& opt = {}) {
  LayerFamily f;
  int n, d;
  if (opt.doubled) {
    n = 3 + rng.below_int(3);  // base symbols 3..5
    d = 2 * (1 + rng.below_int(2));
    f.universe = SymbolUniverse::doubled(n);
  } else if (opt.bipartite_sections) {
    int half = 2 + rng.below_int(3);  // classes of 2..4
    n = 2 * half;
    d = 2 + rng.below_int(std::min(3, n - 2));
    f.universe = SymbolUniverse::bipartite(half, half);
  } else {
    n = 4 + rng.below_int(7);  // 4..10
    d = 2 + rng.below_int(3);  // 2..4
    if (d >= n) d = n - 1;
    f.universe = SymbolUniverse::plain(n);
  }
  f.d = d;

  int member_target = 3 + rng.below_int(10);
  std::vector<FaceSet> members;
  for (int tries = 0; tries < 200 && static_cast<int>(members.size()) < member_target; ++tries) {
    FaceSet c = random_face(rng, f.universe, d);
    bool fresh = true;
    for (const auto& m : members)
      if (m == c) fresh = false;
    if (fresh) members.push_back(c);
  }
  int layer_count = 1 + rng.below_int(std::min<int>(4, static_cast<int>(members.size())));
  f.layers.resize(static_cast<size_t>(layer_count));
  for (size_t i = 0; i < members.size(); ++i) {
    int k = i < static_cast<size_t>(layer_count) ? static_cast<int>(i)
                                                 : rng.below_int(layer_count);
    f.layers[static_cast<size_t>(k)].push_back(members[i]);
  }
  if (opt.bipartite_sections) {
    int s = 1;
    for (int k = 0; k < layer_count; ++k) {
      f.sections.push_back(s);
      if (rng.below_int(2)) ++s;
    }
  }
  f.validate();
  return f;
}

/// Random connected graph over the family's vertex collections.
inline SubsetPartitionGraph random_graph(Rng& rng, const LayerFamily& f) {
  SubsetPartitionGraph g;
  g.universe = f.universe;
  g.d = f.d;
  g.vertices = f.layers;
  int v = g.vertex_count();
  for (int i = 1; i < v; ++i) g.edges.emplace_back(rng.below_int(i), i);  // random spanning tree
  int extra = rng.below_int(v + 1);
  for (int e = 0; e < extra; ++e) {
    int a = rng.below_int(v), b = rng.below_int(v);
    if (a != b && !g.has_edge(a, b)) g.edges.emplace_back(a, b);
    g.normalize_edges();
  }
  g.normalize_edges();
  return g;
}

}  // namespace spg::test
