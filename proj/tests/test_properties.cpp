#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "spg/covering.hpp"
#include "spg/enumerate.hpp"
#include "spg/error.hpp"
#include "spg/json_io.hpp"
#include "spg/properties.hpp"

using namespace spg;
using test::face;
using test::make_family;

TEST_CASE("dimension reduction gap produces the expected witness") {
  auto u = SymbolUniverse::plain(3);
  auto fam = make_family(u, 2, {{{1, 2}}, {{2, 3}}, {{1, 3}}});
  auto r = check_dimension_reduction(fam);
  CHECK(!r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->at("set").get<std::vector<int>>() == std::vector<int>{1});
  CHECK(r.witness->at("active_layers").get<std::vector<int>>() == std::vector<int>{1, 3});
}

TEST_CASE("three containers of a ridge break endpoint count") {
  auto u = SymbolUniverse::plain(5);
  auto fam = make_family(u, 3, {{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}});
  auto r = check_endpoint_count(fam);
  CHECK(!r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->at("set").get<std::vector<int>>() == std::vector<int>{1, 2});
  CHECK(r.witness->at("count").get<int>() == 3);
}

TEST_CASE("a single vertex satisfies adjacency and strong adjacency vacuously") {
  auto u = SymbolUniverse::plain(4);
  auto fam = make_family(u, 2, {{{1, 2}, {3, 4}}});
  CHECK(check_adjacency(fam).passed);
  CHECK(check_strong_adjacency(fam).passed);
  CHECK(check_dimension_reduction(fam).passed);
}

TEST_CASE("checker consistency: strong adjacency implies adjacency, m-covering implies covering") {
  Rng rng(5);
  CheckOptions opts;
  opts.candidate_budget = 4'000'000;
  for (int t = 0; t < 40; ++t) {
    auto fam = test::random_family(rng);
    if (check_strong_adjacency(fam, opts).passed) CHECK(check_adjacency(fam, opts).passed);
    if (check_covering_family(fam, CoveringVariant::m_covering(2), opts).passed)
      CHECK(check_covering_family(fam, CoveringVariant::covering(), opts).passed);
    if (check_covering_family(fam, CoveringVariant::covering(), opts).passed)
      CHECK(check_dimension_reduction(fam, opts).passed);
  }
}

TEST_CASE("covering quantifies over non-appearing candidates too") {
  auto u = SymbolUniverse::plain(4);
  // symbol 4 appears nowhere, so {4} already fails covering
  auto fam = make_family(u, 2, {{{1, 2}, {1, 3}, {2, 3}}});
  auto r = check_covering_family(fam, CoveringVariant::covering());
  CHECK(!r.passed);
}

TEST_CASE("linkage inspects consecutive layers only") {
  auto u = SymbolUniverse::plain(6);
  auto linked = make_family(u, 2, {{{1, 2}}, {{2, 3}}, {{3, 4}}});
  CHECK(check_covering_family(linked, CoveringVariant::linkage()).passed);
  auto broken = make_family(u, 2, {{{1, 2}}, {{4, 5}}});
  auto r = check_covering_family(broken, CoveringVariant::linkage());
  CHECK(!r.passed);
  CHECK(r.witness->at("layers").get<std::vector<int>>() == std::vector<int>{1, 2});
}

TEST_CASE("completeness over a doubled universe can exceed the budget") {
  auto u = SymbolUniverse::plain(20);
  auto dbl = u.doubled_version();
  LayerFamily fam;
  fam.universe = dbl;
  fam.d = 10;
  fam.layers = {{double_set(u, face(u, {1, 2, 3, 4, 5}))}};
  CheckOptions opts;
  opts.candidate_budget = 1000;  // C(40, 10) is far beyond this
  CHECK_THROWS_AS((void)check_covering_family(fam, CoveringVariant::completeness(), opts), Error);
}

TEST_CASE("sectioned covering leaves out-of-bounds candidates unconstrained") {
  auto u = SymbolUniverse::bipartite(3, 3);
  // one section j = 1: members need one A and one B symbol around candidates
  // with |C & A| <= d-1 = 1 and |C & B| <= 1; B-pairs are never constrained
  auto fam = make_family(u, 2, {{{1, 4}, {2, 5}, {3, 6}, {1, 5}, {2, 4}, {1, 6}, {3, 4}, {2, 6}, {3, 5}}},
                         {1});
  auto r = check_sectioned_covering(fam, 1);
  CHECK(r.passed);
}

TEST_CASE("simplex boundary is a normal pseudomanifold") {
  for (int d = 2; d <= 5; ++d) {
    auto u = SymbolUniverse::plain(d + 1);
    LayerFamily fam;
    fam.universe = u;
    fam.d = d;
    fam.layers = {all_k_subsets(d + 1, d)};
    CHECK(check_pseudomanifold(fam).passed);
    CHECK(check_normal(fam).passed);
  }
}

TEST_CASE("normality failure names a disconnected star") {
  auto u = SymbolUniverse::plain(5);
  // two triangles sharing only the vertex 1: its star is disconnected
  auto fam = make_family(u, 3, {{{1, 2, 3}, {1, 4, 5}}});
  auto r = check_normal(fam);
  CHECK(!r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->at("face").get<std::vector<int>>() == std::vector<int>{1});
  CHECK(r.witness->at("components").get<int>() == 2);
}

TEST_CASE("sampled mode is labeled honestly") {
  Rng rng(1);
  // a family big enough to blow a tiny budget
  auto designs = build_disjoint_covering_designs(12, 3, 1);
  auto fam = designs.to_layer_family();
  CheckOptions opts;
  opts.candidate_budget = 50;
  opts.sample_count = 500;
  auto r = check_dimension_reduction(fam, opts);
  CHECK(r.mode == CheckMode::Sampled);
  CHECK(r.candidates == 500);
  CHECK(r.note.find("sampled") != std::string::npos);
  CHECK(r.passed);
}

TEST_CASE("verification results serialize with mode and witness") {
  auto u = SymbolUniverse::plain(3);
  auto fam = make_family(u, 2, {{{1, 2}}, {{2, 3}}, {{1, 3}}});
  auto j = check_dimension_reduction(fam).to_json();
  CHECK(j.at("property") == "dimension-reduction");
  CHECK(j.at("mode") == "exhaustive");
  CHECK(j.at("passed") == false);
  CHECK(j.contains("witness"));
  CHECK(j.at("candidates").get<int>() > 0);
}
