#include "spg/family.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "spg/error.hpp"

namespace spg {

Rational make_rational(long long num, long long den) {
  long long g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

static void check_members(const SymbolUniverse& u, int d,
                          const std::vector<std::vector<FaceSet>>& collections) {
  const Bits full = u.full_mask();
  std::vector<FaceSet> all;
  all.reserve(64);
  for (const auto& col : collections) {
    if (col.empty()) fail(Errc::InvalidFamily, "empty vertex collection");
    for (const auto& s : col) {
      if (!s.subset_of(full)) fail(Errc::InvalidFamily, "member outside the universe");
      if (s.count() != d) fail(Errc::InvalidFamily, "member cardinality differs from d");
      all.push_back(s);
    }
  }
  std::sort(all.begin(), all.end(), [](const Bits& a, const Bits& b) { return a.word_less(b); });
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    fail(Errc::InvalidFamily, "vertex collections are not disjoint");
}

void LayerFamily::validate() const {
  if (layers.empty()) fail(Errc::InvalidFamily, "family has no layers");
  check_members(universe, d, layers);
  if (!sections.empty()) {
    if (sections.size() != layers.size())
      fail(Errc::InvalidFamily, "sectioning size differs from layer count");
    for (size_t i = 1; i < sections.size(); ++i)
      if (sections[i] < sections[i - 1])
        fail(Errc::InvalidFamily, "section numbers must be nondecreasing along the path");
  }
}

std::vector<std::array<int, 3>> LayerFamily::section_ranges() const {
  std::vector<std::array<int, 3>> out;
  if (!sectioned()) return out;
  int first = 0;
  for (int i = 1; i <= layer_count(); ++i) {
    if (i == layer_count() || sections[static_cast<size_t>(i)] != sections[static_cast<size_t>(first)]) {
      out.push_back({sections[static_cast<size_t>(first)], first, i - 1});
      first = i;
    }
  }
  return out;
}

void LayerFamily::sort_members() {
  for (auto& layer : layers)
    std::sort(layer.begin(), layer.end(),
              [](const Bits& a, const Bits& b) { return a.canonical_less(b); });
}

void SubsetPartitionGraph::validate() const {
  if (vertices.empty()) fail(Errc::InvalidFamily, "graph has no vertices");
  check_members(universe, d, vertices);
  for (auto [v, w] : edges) {
    if (v < 0 || w < 0 || v >= vertex_count() || w >= vertex_count())
      fail(Errc::InvalidFamily, "edge endpoint out of range");
    if (v == w) fail(Errc::InvalidFamily, "self-loop");
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::InvalidFamily, "duplicate edge");
  if (!connected()) fail(Errc::InvalidFamily, "underlying graph is disconnected");
}

std::vector<std::vector<int>> SubsetPartitionGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<size_t>(vertex_count()));
  for (auto [v, w] : edges) {
    adj[static_cast<size_t>(v)].push_back(w);
    adj[static_cast<size_t>(w)].push_back(v);
  }
  return adj;
}

bool SubsetPartitionGraph::connected() const {
  if (vertices.empty()) return false;
  auto dist = bfs_distances(0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::vector<int> SubsetPartitionGraph::bfs_distances(int src) const {
  std::vector<int> dist(static_cast<size_t>(vertex_count()), -1);
  auto adj = adjacency();
  std::deque<int> queue{src};
  dist[static_cast<size_t>(src)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<size_t>(v)]) {
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int SubsetPartitionGraph::diameter() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    auto dist = bfs_distances(v);
    for (int x : dist) {
      if (x < 0) fail(Errc::Connectivity, "diameter of a disconnected graph");
      best = std::max(best, x);
    }
  }
  return best;
}

Rational SubsetPartitionGraph::hirsch_ratio() const {
  return make_rational(diameter(), universe.base_symbols());
}

void SubsetPartitionGraph::normalize_edges() {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool SubsetPartitionGraph::has_edge(int v, int w) const {
  if (v > w) std::swap(v, w);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(v, w));
}

SubsetPartitionGraph as_graph(const LayerFamily& family) {
  SubsetPartitionGraph g;
  g.universe = family.universe;
  g.d = family.d;
  g.vertices = family.layers;
  for (int i = 0; i + 1 < family.layer_count(); ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

}  // namespace spg
