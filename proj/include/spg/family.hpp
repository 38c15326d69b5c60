#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "spg/universe.hpp"

namespace spg {

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Rational make_rational(long long num, long long den);

/// An ordered partition of a collection of d-sets into nonempty layers; the
/// underlying graph is the path over the layer order. Optionally sectioned:
/// one section number per layer, nondecreasing along the path.
struct LayerFamily {
  SymbolUniverse universe;
  int d = 0;
  std::vector<std::vector<FaceSet>> layers;
  std::vector<int> sections;  // empty or one entry per layer

  int layer_count() const { return static_cast<int>(layers.size()); }
  bool sectioned() const { return !sections.empty(); }
  size_t member_count() const {
    size_t c = 0;
    for (const auto& l : layers) c += l.size();
    return c;
  }

  /// Throws InvalidFamily when any structural invariant is violated.
  void validate() const;

  /// Layer ranges per section, as (section, first, last) with 0-based
  /// inclusive layer indices. Empty when unsectioned.
  std::vector<std::array<int, 3>> section_ranges() const;

  /// Canonical form: members sorted within each layer. Serialization order.
  void sort_members();
};

/// A general subset partition graph: vertex collections partition the member
/// sets, edges form a simple connected graph. Vertices are 0-based.
struct SubsetPartitionGraph {
  SymbolUniverse universe;
  int d = 0;
  std::vector<std::vector<FaceSet>> vertices;
  std::vector<std::pair<int, int>> edges;  // normalized v < w

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  size_t member_count() const {
    size_t c = 0;
    for (const auto& v : vertices) c += v.size();
    return c;
  }

  void validate() const;
  bool connected() const;
  std::vector<std::vector<int>> adjacency() const;
  /// BFS distances from src; -1 for unreachable.
  std::vector<int> bfs_distances(int src) const;
  /// Max over vertex pairs of BFS distance. Throws Connectivity if disconnected.
  int diameter() const;
  /// diameter / n where n is the base symbol count.
  Rational hirsch_ratio() const;

  void normalize_edges();
  bool has_edge(int v, int w) const;
};

/// Path graph over the family's layers.
SubsetPartitionGraph as_graph(const LayerFamily& family);

}  // namespace spg
