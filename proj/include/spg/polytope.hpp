#pragma once

#include <vector>

#include "spg/family.hpp"

namespace spg {

/// Combinatorial vertex-facet incidence of a simple polytope: n facets,
/// dimension d, one d-set of facet indices per polytope vertex.
struct PolytopeIncidence {
  int n = 0;
  int d = 0;
  std::vector<FaceSet> vertices;  // over plain(n)

  void validate() const;  // simplicity, endpoint count, connectivity
};

/// The dual subset partition graph: singleton vertices {A_v}, edges where
/// two vertex sets share d-1 facets. Isomorphic to the graph of the polytope.
SubsetPartitionGraph spg_from_incidence(const PolytopeIncidence& p);

/// Layers by BFS distance from vertex u; a path family of length ecc(u).
LayerFamily layered_spg(const SubsetPartitionGraph& g, int u);

/// Collapse distance classes from an eccentric vertex (ties: least vertex id)
/// into a path family of length diameter(g).
LayerFamily to_path(const SubsetPartitionGraph& g);

/// Split every vertex into singletons: cliques inside former vertices,
/// complete bipartite wiring across former edges. Requires >= 1 edge.
SubsetPartitionGraph to_singletons(const SubsetPartitionGraph& g);

/// Edge edits. add_edge requires distinct non-adjacent vertices; contract_edge
/// merges the two endpoint collections into one vertex and rewires simply.
SubsetPartitionGraph add_edge(const SubsetPartitionGraph& g, int v, int w);
SubsetPartitionGraph contract_edge(const SubsetPartitionGraph& g, int v, int w);

/// Fixtures.
PolytopeIncidence cube_incidence();          // 3-cube, facet pairs (1,2),(3,4),(5,6)
PolytopeIncidence simplex_incidence(int d);  // d-simplex, n = d+1

}  // namespace spg
