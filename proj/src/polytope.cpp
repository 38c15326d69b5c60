#include "spg/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "spg/child_index.hpp"
#include "spg/error.hpp"

namespace spg {

void PolytopeIncidence::validate() const {
  if (n < 1 || d < 1) fail(Errc::InvalidIncidence, "need n >= 1 and d >= 1");
  if (vertices.empty()) fail(Errc::InvalidIncidence, "no vertices");
  const Bits full = SymbolUniverse::plain(n).full_mask();
  for (const auto& v : vertices) {
    if (!v.subset_of(full)) fail(Errc::InvalidIncidence, "facet index out of range");
    if (v.count() != d)
      fail(Errc::InvalidIncidence, "a vertex lies on " + std::to_string(v.count()) +
                                       " facets; a simple polytope needs exactly d");
  }
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end(),
            [](const Bits& a, const Bits& b) { return a.word_less(b); });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::InvalidIncidence, "two vertices share the same facet set");

  auto ix = ChildIndex::build(vertices);
  for (size_t c = 0; c + 1 < ix.offsets.size(); ++c) {
    if (ix.offsets[c + 1] - ix.offsets[c] > 2)
      fail(Errc::InvalidIncidence, "a ridge lies on more than two vertices");
  }
  // connectivity is checked on the derived graph
  spg_from_incidence(*this);
}

SubsetPartitionGraph spg_from_incidence(const PolytopeIncidence& p) {
  SubsetPartitionGraph g;
  g.universe = SymbolUniverse::plain(p.n);
  g.d = p.d;
  g.vertices.reserve(p.vertices.size());
  for (const auto& v : p.vertices) g.vertices.push_back({v});

  auto ix = ChildIndex::build(p.vertices);
  for (size_t c = 0; c + 1 < ix.offsets.size(); ++c) {
    int32_t lo = ix.offsets[c], hi = ix.offsets[c + 1];
    if (hi - lo == 2)
      g.edges.emplace_back(ix.members[static_cast<size_t>(lo)],
                           ix.members[static_cast<size_t>(lo + 1)]);
  }
  g.normalize_edges();
  if (!g.connected()) fail(Errc::InvalidIncidence, "incidence graph is disconnected");
  return g;
}

LayerFamily layered_spg(const SubsetPartitionGraph& g, int u) {
  if (u < 0 || u >= g.vertex_count()) fail(Errc::Domain, "source vertex out of range");
  if (!g.connected()) fail(Errc::Connectivity, "layering a disconnected graph");
  auto dist = g.bfs_distances(u);
  int ecc = *std::max_element(dist.begin(), dist.end());
  LayerFamily f;
  f.universe = g.universe;
  f.d = g.d;
  f.layers.resize(static_cast<size_t>(ecc + 1));
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& layer = f.layers[static_cast<size_t>(dist[static_cast<size_t>(v)])];
    const auto& col = g.vertices[static_cast<size_t>(v)];
    layer.insert(layer.end(), col.begin(), col.end());
  }
  f.validate();
  return f;
}

LayerFamily to_path(const SubsetPartitionGraph& g) {
  if (!g.connected()) fail(Errc::Connectivity, "to_path needs a connected graph");
  const int diam = g.diameter();
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = g.bfs_distances(v);
    if (*std::max_element(dist.begin(), dist.end()) == diam) return layered_spg(g, v);
  }
  fail(Errc::ConstructionFailure, "no vertex realizes the diameter");
}

SubsetPartitionGraph to_singletons(const SubsetPartitionGraph& g) {
  if (g.edges.empty())
    fail(Errc::DiameterUndefined, "splitting into singletons needs at least one edge");
  SubsetPartitionGraph out;
  out.universe = g.universe;
  out.d = g.d;
  std::vector<std::pair<int, int>> range(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    int first = static_cast<int>(out.vertices.size());
    for (const auto& member : g.vertices[static_cast<size_t>(v)]) out.vertices.push_back({member});
    range[static_cast<size_t>(v)] = {first, static_cast<int>(out.vertices.size())};
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [lo, hi] = range[static_cast<size_t>(v)];
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) out.edges.emplace_back(i, j);
  }
  for (auto [v, w] : g.edges) {
    auto [vlo, vhi] = range[static_cast<size_t>(v)];
    auto [wlo, whi] = range[static_cast<size_t>(w)];
    for (int i = vlo; i < vhi; ++i)
      for (int j = wlo; j < whi; ++j) out.edges.emplace_back(i, j);
  }
  out.normalize_edges();
  return out;
}

SubsetPartitionGraph add_edge(const SubsetPartitionGraph& g, int v, int w) {
  if (v < 0 || w < 0 || v >= g.vertex_count() || w >= g.vertex_count())
    fail(Errc::InvalidEdit, "edge endpoint out of range");
  if (v == w) fail(Errc::InvalidEdit, "cannot add a self-loop");
  if (g.has_edge(v, w)) fail(Errc::InvalidEdit, "edge already present");
  SubsetPartitionGraph out = g;
  out.edges.emplace_back(v, w);
  out.normalize_edges();
  return out;
}

SubsetPartitionGraph contract_edge(const SubsetPartitionGraph& g, int v, int w) {
  if (!g.has_edge(v, w)) fail(Errc::InvalidEdit, "no such edge");
  if (v > w) std::swap(v, w);
  SubsetPartitionGraph out;
  out.universe = g.universe;
  out.d = g.d;
  auto remap = [&](int x) { return x == w ? v : (x > w ? x - 1 : x); };
  out.vertices.resize(static_cast<size_t>(g.vertex_count() - 1));
  for (int x = 0; x < g.vertex_count(); ++x) {
    auto& dst = out.vertices[static_cast<size_t>(remap(x))];
    const auto& src = g.vertices[static_cast<size_t>(x)];
    dst.insert(dst.end(), src.begin(), src.end());
  }
  for (auto [a, b] : g.edges) {
    int ra = remap(a), rb = remap(b);
    if (ra != rb) out.edges.emplace_back(ra, rb);
  }
  out.normalize_edges();
  return out;
}

PolytopeIncidence cube_incidence() {
  PolytopeIncidence p;
  p.n = 6;
  p.d = 3;
  // facet pairs (1,2), (3,4), (5,6); a vertex picks one facet per pair
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Bits v;
        v.set(a);
        v.set(2 + b);
        v.set(4 + c);
        p.vertices.push_back(v);
      }
  return p;
}

PolytopeIncidence simplex_incidence(int d) {
  if (d < 1) fail(Errc::Domain, "need d >= 1");
  PolytopeIncidence p;
  p.n = d + 1;
  p.d = d;
  for (int skip = 0; skip < d + 1; ++skip) {
    Bits v;
    for (int i = 0; i < d + 1; ++i)
      if (i != skip) v.set(i);
    p.vertices.push_back(v);
  }
  return p;
}

}  // namespace spg
