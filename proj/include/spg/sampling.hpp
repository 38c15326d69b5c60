#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spg/family.hpp"
#include "spg/rng.hpp"

namespace spg {

/// Thresholds a random set family must satisfy. Absent fields are unchecked.
struct SeparationThresholds {
  std::optional<int> pairwise_intersection_max;  // |Pi & Pj| <= v, i != j
  std::optional<int> pairwise_difference_min;    // |Pi - Pj| >= v, ordered pairs
  std::optional<int> four_union_min;             // |Pi|Pj|Pk|Pl| >= v, 4-subsets
};

struct SeparationSpec {
  SeparationThresholds thresholds;
  size_t retry_budget = 2000;
};

struct SeparationViolation {
  std::string constraint;    // "pairwise-intersection" | "pairwise-difference" | "four-union"
  std::vector<int> indices;  // offending family indices
  int value = 0;
  int bound = 0;
};

/// All threshold violations of a concrete family, deterministic order.
std::vector<SeparationViolation> separation_violations(const std::vector<FaceSet>& sets,
                                                       const SeparationThresholds& t);

/// Uniform random subsets of the pooled slots with the given sizes, resampled
/// as a whole family until every threshold holds. Throws SeparationInfeasible
/// (naming the first violated constraint) when provably impossible or when
/// the retry budget runs out.
std::vector<FaceSet> sample_separated_family(const Bits& slot_pool, const std::vector<int>& sizes,
                                             const SeparationSpec& spec, Rng& rng);

std::vector<FaceSet> sample_separated_family(const SymbolUniverse& u, const Bits& slot_pool,
                                             const std::vector<int>& sizes,
                                             const SeparationSpec& spec, uint64_t seed);

}  // namespace spg
