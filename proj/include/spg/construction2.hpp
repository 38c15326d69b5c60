#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spg/covering.hpp"
#include "spg/family.hpp"
#include "spg/properties.hpp"
#include "spg/sampling.hpp"

namespace spg {

/// (ceil(eps*d), floor((1-eps)*d)): the retained section window.
std::pair<int, int> section_bounds(int d, double epsilon);

struct SectionPlan {
  int j = 0;       // section number
  int ellA = 0;    // covering designs extracted on the A side (dimension d-j)
  int ellB = 0;    // covering designs extracted on the B side (dimension j)
  int ell = 0;     // mesh layer count = min(ellA, ellB)
  int delta = 0;   // layers after merging groups of m
};

/// One interpolation set of the sectioned pipeline. Mid-section records
/// (k < delta_j) bridge layers (j,k) and (j,k+1) inside section j; the
/// end-of-section record (k = delta_j) bridges into layer (j+1, 1).
struct Interp2Record {
  int j = 0;
  int k = 0;
  bool end = false;
  FaceSet P;  // (d-j-1)-subset of A
  FaceSet Q;  // j-subset of B
  int f = 0;  // in A
  int g = 0;  // mid only, in A
  int h = 0;  // end only, in B
  FaceSet F;  // P + f
  FaceSet G;  // mid: P + g
  FaceSet H;  // end: Q + h
  FaceSet U;  // A-part of the projection: mid P+{f,g}, end P+{f}
  FaceSet I;  // doubled 2d-set
  int layer0 = 0;  // 0-based absolute layer holding I
};

struct Removal2Set {
  std::vector<FaceSet> resemblers_a;  // doubled; one per (record, a in P)
  std::vector<FaceSet> resemblers_b;  // doubled; one per (end record, b in Q)
  std::vector<FaceSet> envelopers;    // correspondence sets covering some mid U
};

struct SectionedConfig {
  int n = 0;  // multiple of 4; the dimension is d = n/4
  int m = 1;
  double epsilon = 0.25;
  uint64_t seed = 1;
  bool strict = false;        // enforce separation by rejection (desk mode logs)
  int pairwise_diff_min = 5;  // |P \ P'| >= 5, same for Q
  int four_union_min = -1;    // -1 means ceil(13 d / 16)
  size_t retry_budget = 2000;
  size_t mesh_budget = 4'000'000;
  CoveringBuildOptions covering;

  int d() const { return n / 4; }
  int effective_four_union_min() const {
    return four_union_min < 0 ? (13 * d() + 15) / 16 : four_union_min;
  }
  void validate() const;
};

struct SectionedBuild {
  LayerFamily V;
  std::vector<SectionPlan> plan;
  int jl = 0, jr = 0;
};

/// Stack one mesh per section j in [jl, jr]. Section j pairs an A-side
/// covering-design family of dimension d-j with a B-side one of dimension j;
/// the product cell (x, y) lands in mesh layer (x + y) mod min(ellA, ellB),
/// which makes every layer cover every admissible set on both sides.
SectionedBuild build_sectioned_family(const SectionedConfig& cfg);

/// Merge groups of m consecutive layers inside each section; the last group
/// of a section absorbs the remainder. Sections outside the window (when
/// given) are dropped first.
LayerFamily merge_within_sections(const LayerFamily& V, int m,
                                  std::optional<std::pair<int, int>> window = {});

struct Interp2Output {
  LayerFamily Y;
  std::vector<Interp2Record> records;
  std::vector<SeparationViolation> separation_log;  // constraints prefixed "P:" / "Q:"
};

Interp2Output choose_interpolations2(const LayerFamily& W, const LayerFamily& X,
                                     const SectionedConfig& cfg);

Removal2Set removal_sets2(const LayerFamily& Y, const std::vector<Interp2Record>& records);

/// Extend a set C (over the bipartite base, |C| <= d-1, containing none of
/// the given A-side sets) to a (d-1)-set that keeps |C' & A| <= d-j and
/// |C' & B| <= j and still contains none of them. A-side growth dodges the
/// elements whose addition would swallow one of the sets; nullopt when that
/// leaves too little room.
std::optional<FaceSet> extend_avoiding(const SymbolUniverse& u, int d, int j, const FaceSet& c,
                                       const std::vector<FaceSet>& avoid);

struct Pipeline2Result {
  SectionedConfig config;
  std::vector<SectionPlan> plan;
  int jl = 0, jr = 0;
  LayerFamily V, W, X, Y, Z;
  std::vector<Interp2Record> records;
  Removal2Set removal;
  std::vector<FaceSet> removed;
  std::vector<SeparationViolation> separation_log;
  std::vector<std::string> linking_violations;
  bool separation_clean = true;
  std::vector<std::string> waived;
  double bound_value = 0;  // (1-2eps)/(48m) * n^2 / ln(n/2) - 1
  std::vector<VerificationResult> reports;

  nlohmann::json stats_json() const;
};

Pipeline2Result pipeline2(const SectionedConfig& cfg, const CheckOptions& check = {});

nlohmann::json records2_to_json(const SymbolUniverse& base, const std::vector<Interp2Record>& records);
std::vector<Interp2Record> records2_from_json(const SymbolUniverse& base, const nlohmann::json& j);

}  // namespace spg
