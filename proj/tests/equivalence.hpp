#pragma once

// Checker-vs-oracle equivalence on random tiny families: every property
// checker must agree with the direct brute-force definition.

#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracle.hpp"
#include "spg/properties.hpp"

namespace spg::test {

struct EquivalenceOutcome {
  int families = 0;
  int comparisons = 0;
  std::vector<std::string> disagreements;
};

inline void compare(EquivalenceOutcome& out, const std::string& what, bool oracle_pass,
                    const VerificationResult& checker) {
  ++out.comparisons;
  if (checker.mode != CheckMode::Exhaustive)
    out.disagreements.push_back(what + ": checker left exhaustive mode on a tiny instance");
  if (checker.passed != oracle_pass)
    out.disagreements.push_back(what + ": oracle " + (oracle_pass ? "pass" : "fail") +
                                ", checker " + (checker.passed ? "pass" : "fail"));
  if (!checker.passed && !checker.witness)
    out.disagreements.push_back(what + ": failing checker carries no witness");
}

inline EquivalenceOutcome run_equivalence(int family_count, uint64_t seed) {
  EquivalenceOutcome out;
  Rng rng(seed);
  CheckOptions opts;
  opts.candidate_budget = 4'000'000;  // tiny instances must stay exhaustive

  for (int i = 0; i < family_count; ++i) {
    std::string tag = "family " + std::to_string(i);
    int flavor = i % 4;

    if (flavor == 0 || flavor == 1) {  // plain path families
      auto fam = random_family(rng);
      auto members = oracle::flatten_members(fam.layers);
      auto adj = oracle::path_adjacency(fam.layer_count());
      compare(out, tag + " dr",
              oracle::dimension_reduction(fam.universe, fam.d, fam.layers, adj),
              check_dimension_reduction(fam, opts));
      compare(out, tag + " adj", oracle::adjacency(fam.d, fam.layers, adj),
              check_adjacency(fam, opts));
      auto edges = as_graph(fam).edges;
      compare(out, tag + " sa", oracle::strong_adjacency(fam.d, fam.layers, adj, edges),
              check_strong_adjacency(fam, opts));
      compare(out, tag + " ec", oracle::endpoint_count(fam.universe, fam.d, members),
              check_endpoint_count(fam, opts));
      compare(out, tag + " cov", oracle::covering(fam, 1),
              check_covering_family(fam, CoveringVariant::covering(), opts));
      compare(out, tag + " 2cov", oracle::covering(fam, 2),
              check_covering_family(fam, CoveringVariant::m_covering(2), opts));
      compare(out, tag + " complete", oracle::completeness(fam),
              check_covering_family(fam, CoveringVariant::completeness(), opts));
      compare(out, tag + " link", oracle::linkage(fam),
              check_covering_family(fam, CoveringVariant::linkage(), opts));
      compare(out, tag + " pm", oracle::pseudomanifold(fam.universe, fam.d, members),
              check_pseudomanifold(fam, opts));
      compare(out, tag + " normal", oracle::normal(fam.universe, fam.d, members),
              check_normal(fam, opts));
    } else if (flavor == 2) {  // general graphs
      auto fam = random_family(rng);
      auto g = random_graph(rng, fam);
      auto adj = g.adjacency();
      auto members = oracle::flatten_members(g.vertices);
      compare(out, tag + " graph dr",
              oracle::dimension_reduction(g.universe, g.d, g.vertices, adj),
              check_dimension_reduction(g, opts));
      compare(out, tag + " graph adj", oracle::adjacency(g.d, g.vertices, adj),
              check_adjacency(g, opts));
      compare(out, tag + " graph sa", oracle::strong_adjacency(g.d, g.vertices, adj, g.edges),
              check_strong_adjacency(g, opts));
      compare(out, tag + " graph ec", oracle::endpoint_count(g.universe, g.d, members),
              check_endpoint_count(g, opts));
    } else {  // sectioned bipartite and doubled families
      auto fam = random_family(rng, {false, true});
      compare(out, tag + " seccov", oracle::sectioned_covering(fam, 1),
              check_sectioned_covering(fam, 1, opts));
      compare(out, tag + " 2seccov", oracle::sectioned_covering(fam, 2),
              check_sectioned_covering(fam, 2, opts));
      auto dbl = random_family(rng, {true, false});
      compare(out, tag + " widthcov", oracle::width_covering(dbl),
              check_width_covering(dbl, opts));
      auto members = oracle::flatten_members(dbl.layers);
      compare(out, tag + " doubled ec", oracle::endpoint_count(dbl.universe, dbl.d, members),
              check_endpoint_count(dbl, opts));
      auto adj = oracle::path_adjacency(dbl.layer_count());
      compare(out, tag + " doubled dr",
              oracle::dimension_reduction(dbl.universe, dbl.d, dbl.layers, adj),
              check_dimension_reduction(dbl, opts));
    }
    ++out.families;
  }
  return out;
}

}  // namespace spg::test
