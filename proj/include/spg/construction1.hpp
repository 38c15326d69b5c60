#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spg/covering.hpp"
#include "spg/family.hpp"
#include "spg/properties.hpp"
#include "spg/sampling.hpp"

namespace spg {

/// One interpolation set bridging merged layers k and k+1 (1-based): a 2d-set
/// whose first row is F = P + f (a d-set of layer k) and second row is
/// G = P + g (a d-set of layer k+1).
struct Interp1Record {
  int k = 0;
  FaceSet P;  // (d-1)-set over the base universe
  int f = 0, g = 0;
  FaceSet F, G;
  FaceSet U;  // P + {f, g}; the projection of I
  FaceSet I;  // over the doubled universe
};

struct Pipeline1Config {
  int n = 0;
  int d = 0;
  int m = 3;  // merge width, >= 3
  uint64_t seed = 1;
  bool strict = false;          // enforce separation by whole-family rejection
  int separation_bound = -1;    // pairwise |P & P'| cap; -1 means d-4
  size_t retry_budget = 2000;
  CoveringBuildOptions covering;

  int effective_separation_bound() const { return separation_bound < 0 ? d - 4 : separation_bound; }
  void validate() const;
};

struct Interp1Output {
  LayerFamily Y;
  std::vector<Interp1Record> records;
  std::vector<SeparationViolation> separation_log;
};

struct Removal1Output {
  LayerFamily Z;
  std::vector<FaceSet> removed;  // doubled sets actually present and removed
};

struct Pipeline1Result {
  Pipeline1Config config;
  LayerFamily V, W, X, Y, Z;
  std::vector<Interp1Record> records;
  std::vector<FaceSet> removed;
  std::vector<SeparationViolation> separation_log;
  std::vector<std::string> linking_violations;  // removed linking sets, if any
  bool separation_clean = true;
  std::vector<std::string> waived;
  int ell = 0;    // layers of V
  int delta = 0;  // layers of W
  std::vector<VerificationResult> reports;

  nlohmann::json stats_json() const;
};

/// Merge consecutive groups of m layers; the final layer absorbs the
/// remainder, so the result has floor(ell/m) layers.
LayerFamily merge_layers(const LayerFamily& V, int m);

/// Map every member through the doubling operation; sections survive.
LayerFamily double_family(const LayerFamily& W);

Interp1Output choose_interpolations(const LayerFamily& W, const LayerFamily& X,
                                    const Pipeline1Config& cfg);

Removal1Output resembler_removal(const LayerFamily& Y, const std::vector<Interp1Record>& records);

/// Full pipeline with verification reports on the final family.
Pipeline1Result pipeline1(const Pipeline1Config& cfg, const CheckOptions& check = {});

nlohmann::json records1_to_json(const SymbolUniverse& base, const std::vector<Interp1Record>& records);
std::vector<Interp1Record> records1_from_json(const SymbolUniverse& base, const nlohmann::json& j);

}  // namespace spg
