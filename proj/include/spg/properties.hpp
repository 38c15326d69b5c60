#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spg/family.hpp"

namespace spg {

enum class PropertyKind {
  DimensionReduction,
  Adjacency,
  StrongAdjacency,
  EndpointCount,
  Covering,
  MCovering,
  Completeness,
  Linkage,
  SectionedCovering,
  MSectionedCovering,
  Pseudomanifold,
  Normal,
  WidthCovering,
};

const char* property_name(PropertyKind p);

enum class CheckMode { Exhaustive, Sampled };

/// Outcome of one property check. A failing result always carries a witness
/// that can be replayed independently of the checker.
struct VerificationResult {
  PropertyKind property = PropertyKind::DimensionReduction;
  int m = 1;
  bool passed = true;
  CheckMode mode = CheckMode::Exhaustive;
  size_t candidates = 0;
  std::optional<nlohmann::json> witness;
  std::string note;

  nlohmann::json to_json() const;
};

struct CheckOptions {
  size_t candidate_budget = 1'000'000;  // distinct candidates before sampled mode
  size_t sample_count = 20'000;
  uint64_t seed = 1;
  int jobs = 1;
};

VerificationResult check_dimension_reduction(const LayerFamily& f, const CheckOptions& o = {});
VerificationResult check_dimension_reduction(const SubsetPartitionGraph& g, const CheckOptions& o = {});

VerificationResult check_adjacency(const LayerFamily& f, const CheckOptions& o = {});
VerificationResult check_adjacency(const SubsetPartitionGraph& g, const CheckOptions& o = {});
VerificationResult check_strong_adjacency(const LayerFamily& f, const CheckOptions& o = {});
VerificationResult check_strong_adjacency(const SubsetPartitionGraph& g, const CheckOptions& o = {});

VerificationResult check_endpoint_count(const LayerFamily& f, const CheckOptions& o = {});
VerificationResult check_endpoint_count(const SubsetPartitionGraph& g, const CheckOptions& o = {});

struct CoveringVariant {
  enum class Kind { Covering, MCovering, Completeness, Linkage };
  Kind kind = Kind::Covering;
  int m = 1;

  static CoveringVariant covering() { return {Kind::Covering, 1}; }
  static CoveringVariant m_covering(int m) { return {Kind::MCovering, m}; }
  static CoveringVariant completeness() { return {Kind::Completeness, 1}; }
  static CoveringVariant linkage() { return {Kind::Linkage, 1}; }
};

VerificationResult check_covering_family(const LayerFamily& f, const CoveringVariant& variant,
                                         const CheckOptions& o = {});

VerificationResult check_sectioned_covering(const LayerFamily& f, int m, const CheckOptions& o = {});

/// Doubled-family analogue of covering: every set of width <= d-1 is active
/// on every layer (d the base dimension).
VerificationResult check_width_covering(const LayerFamily& f, const CheckOptions& o = {});

VerificationResult check_pseudomanifold(const SymbolUniverse& u, int d,
                                        const std::vector<FaceSet>& members,
                                        const CheckOptions& o = {});
VerificationResult check_pseudomanifold(const LayerFamily& f, const CheckOptions& o = {});
VerificationResult check_normal(const SymbolUniverse& u, int d, const std::vector<FaceSet>& members,
                                const CheckOptions& o = {});
VerificationResult check_normal(const LayerFamily& f, const CheckOptions& o = {});

/// All member sets in layer order.
std::vector<FaceSet> all_members(const LayerFamily& f);

}  // namespace spg
