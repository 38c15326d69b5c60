#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "spg/covering.hpp"
#include "spg/error.hpp"
#include "spg/json_io.hpp"
#include "spg/properties.hpp"

using namespace spg;

TEST_CASE("layer-count lower bound arithmetic") {
  CHECK(lambda_lower_bound(20, 5) == 5);   // 16 / ln 20
  CHECK(lambda_lower_bound(6, 3) == 2);    // 4 / ln 6
  for (int d = 3; d <= 6; ++d) CHECK(lambda_lower_bound(d, d) == 0);
  CHECK_THROWS_AS((void)lambda_lower_bound(4, 5), Error);
  CHECK(mesh_section_lower_bound(48) == 1);  // (48/4) / (3 ln 24)
}

TEST_CASE("pairs over four symbols split into three perfect matchings") {
  for (uint64_t seed : {1ull, 7ull, 42ull}) {
    auto fam = build_disjoint_covering_designs(4, 2, seed);
    CHECK(fam.layers.size() == 3);
    CHECK(!fam.leftover_merged);
    for (const auto& layer : fam.layers) {
      CHECK(layer.size() == 2);
      Bits all;
      for (const auto& s : layer) all |= s;
      CHECK(all.count() == 4);  // a perfect matching covers every symbol
    }
  }
}

TEST_CASE("triples over six symbols partition into covering designs") {
  auto fam = build_disjoint_covering_designs(6, 3, 1);
  auto family = fam.to_layer_family();
  family.validate();
  CHECK(family.member_count() == 20);
  CHECK(check_covering_family(family, CoveringVariant::covering()).passed);
  CHECK(check_covering_family(family, CoveringVariant::completeness()).passed);
  CHECK(family.layer_count() >= lambda_lower_bound(6, 3));
}

TEST_CASE("every extracted layer is a covering design on its own") {
  for (auto [n, d] : {std::pair{6, 3}, {8, 3}, {10, 4}}) {
    auto fam = build_disjoint_covering_designs(n, d, 3);
    auto family = fam.to_layer_family();
    family.validate();
    CHECK(check_covering_family(family, CoveringVariant::covering()).passed);
    CHECK(check_covering_family(family, CoveringVariant::completeness()).passed);
    CHECK(family.layer_count() >= lambda_lower_bound(n, d));
  }
}

TEST_CASE("dimension one splits into singleton layers") {
  auto fam = build_disjoint_covering_designs(5, 1, 1);
  CHECK(fam.layers.size() == 5);
  for (const auto& layer : fam.layers) CHECK(layer.size() == 1);
}

TEST_CASE("construction is deterministic per seed") {
  auto a = build_disjoint_covering_designs(8, 3, 5);
  auto b = build_disjoint_covering_designs(8, 3, 5);
  REQUIRE(a.layers.size() == b.layers.size());
  for (size_t i = 0; i < a.layers.size(); ++i) CHECK(a.layers[i] == b.layers[i]);
  CHECK(family_to_json(a.to_layer_family()).dump() == family_to_json(b.to_layer_family()).dump());
}

TEST_CASE("pool budget guard") {
  CoveringBuildOptions opts;
  opts.pool_budget = 10;
  CHECK_THROWS_AS((void)build_disjoint_covering_designs(10, 4, 1, opts), Error);
}
