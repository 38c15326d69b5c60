#pragma once

#include <cstdint>
#include <vector>

#include "spg/family.hpp"

namespace spg {

/// Floor((n - d + 1) / ln n): guaranteed layer count for a partition of the
/// d-subsets of [n] into covering designs.
int lambda_lower_bound(int n, int d);

/// Floor((q - r) / (3 ln q)) with r = dim - 1: the weaker per-side bound used
/// by the mesh layer-count estimates.
int mesh_lambda_lower_bound(int q, int dim);

/// Floor((n/4) / (3 ln(n/2))): per-section layer-count estimate for the
/// sectioned family at dimension n/4.
int mesh_section_lower_bound(int n);

/// Disjoint (n, d, d-1)-covering designs partitioning all d-subsets of [n].
/// Layers after the greedy extraction stops are merged into the last design.
struct CoveringDesignFamily {
  int n = 0;
  int d = 0;
  std::vector<std::vector<FaceSet>> layers;
  bool leftover_merged = false;

  LayerFamily to_layer_family() const;
};

struct CoveringBuildOptions {
  int attempts = 3;                  // randomized whole-partition restarts
  size_t pool_budget = 6'000'000;    // max C(n,d)
};

/// Greedy extraction: repeatedly peel a covering design from the remaining
/// d-sets (max uncovered-children coverage, ties by canonical order or seeded
/// priority on restart attempts); the remainder merges into the last layer.
CoveringDesignFamily build_disjoint_covering_designs(int n, int d, uint64_t seed,
                                                     const CoveringBuildOptions& opts = {});

}  // namespace spg
