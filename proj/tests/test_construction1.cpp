#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "helpers.hpp"
#include "spg/construction1.hpp"
#include "spg/diagram.hpp"
#include "spg/error.hpp"
#include "spg/json_io.hpp"
#include "spg/ops.hpp"

using namespace spg;
using test::face;
using test::make_family;

namespace {

LayerFamily distinct_pairs_family(int layers) {
  // layer i = {{1, i+1}} over enough symbols, structurally a path of singletons
  std::vector<std::vector<std::vector<int>>> spec;
  for (int i = 0; i < layers; ++i) spec.push_back({{1, i + 2}});
  return make_family(SymbolUniverse::plain(layers + 2), 2, spec);
}

Pipeline1Config small_config(uint64_t seed, bool strict) {
  Pipeline1Config cfg;
  cfg.n = 20;
  cfg.d = 4;
  cfg.m = 3;
  cfg.seed = seed;
  cfg.strict = strict;
  return cfg;
}

}  // namespace

TEST_CASE("merging layers") {
  SUBCASE("remainder folds into the last merged layer") {
    auto W = merge_layers(distinct_pairs_family(7), 3);
    REQUIRE(W.layer_count() == 2);
    CHECK(W.layers[0].size() == 3);
    CHECK(W.layers[1].size() == 4);
  }
  SUBCASE("m = 1 is the identity") {
    auto V = distinct_pairs_family(5);
    auto W = merge_layers(V, 1);
    CHECK(W.layers == V.layers);
  }
  SUBCASE("exact division") {
    auto W = merge_layers(distinct_pairs_family(6), 3);
    REQUIRE(W.layer_count() == 2);
    CHECK(W.layers[0].size() == 3);
    CHECK(W.layers[1].size() == 3);
  }
  SUBCASE("too few layers") {
    CHECK_THROWS_AS((void)merge_layers(distinct_pairs_family(2), 3), Error);
  }
}

TEST_CASE("doubling maps members to two-row sets") {
  auto V = build_disjoint_covering_designs(8, 3, 1).to_layer_family();
  auto X = double_family(V);
  CHECK(X.d == 6);
  CHECK(X.layer_count() == V.layer_count());
  for (int k = 0; k < X.layer_count(); ++k) {
    CHECK(X.layers[static_cast<size_t>(k)].size() == V.layers[static_cast<size_t>(k)].size());
    for (const auto& s : X.layers[static_cast<size_t>(k)]) CHECK(width(X.universe, s) == 3);
  }
  CHECK(check_adjacency(X).passed);
  CHECK(check_endpoint_count(X).passed);

  // without interpolation sets no consecutive pair meets in 2d-1 symbols
  if (X.layer_count() >= 2) {
    auto sa = check_strong_adjacency(X);
    CHECK(!sa.passed);
    for (int k = 0; k + 1 < X.layer_count(); ++k) {
      bool witness_pair = false;
      for (const auto& a : X.layers[static_cast<size_t>(k)])
        for (const auto& b : X.layers[static_cast<size_t>(k + 1)])
          if ((a & b).count() == X.d - 1) witness_pair = true;
      CHECK(!witness_pair);
    }
  }
}

TEST_CASE("interpolation records satisfy their structural identities") {
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    auto res = pipeline1(small_config(seed, false));
    const auto& base = res.W.universe;
    REQUIRE(res.records.size() == static_cast<size_t>(res.delta - 1));
    for (const auto& rec : res.records) {
      CHECK(rec.P.count() == res.config.d - 1);
      CHECK(rec.F == (rec.P | Bits::single(base.slot_of(rec.f))));
      CHECK(rec.G == (rec.P | Bits::single(base.slot_of(rec.g))));
      CHECK(rec.f != rec.g);
      CHECK(!rec.G.test(base.slot_of(rec.f)));  // f stays outside G
      CHECK(width(res.X.universe, rec.I) == res.config.d + 1);
      CHECK(project(res.X.universe, rec.I) == rec.U);

      // the two bridged correspondence sets share 2d-1 cells with I
      CHECK((rec.I & double_set(base, rec.F)).count() == 2 * res.config.d - 1);
      CHECK((rec.I & double_set(base, rec.G)).count() == 2 * res.config.d - 1);

      // provenance: F in layer k of W, G in layer k+1
      CHECK(is_active(res.W.layers[static_cast<size_t>(rec.k - 1)], rec.F));
      CHECK(is_active(res.W.layers[static_cast<size_t>(rec.k)], rec.G));
    }
    CHECK(check_covering_family(res.Y, CoveringVariant::linkage()).passed);
    CHECK(check_endpoint_count(res.Y).passed);
  }
}

TEST_CASE("strict mode separates the interpolation data") {
  auto res = pipeline1(small_config(1, true));
  CHECK(res.separation_clean);
  CHECK(res.separation_log.empty());
  const int d = res.config.d;
  for (size_t i = 0; i < res.records.size(); ++i)
    for (size_t j = i + 1; j < res.records.size(); ++j) {
      CHECK((res.records[i].P & res.records[j].P).count() <= d - 4);
      CHECK((res.records[i].U & res.records[j].U).count() <= d - 2);
    }
  // the linking sets D(G) survive removal
  std::unordered_set<Bits, BitsHash> gone(res.removed.begin(), res.removed.end());
  for (const auto& rec : res.records)
    CHECK(!gone.count(double_set(res.W.universe, rec.G)));
  CHECK(res.linking_violations.empty());
}

TEST_CASE("resembler removal matches the two-row surgery") {
  auto res = pipeline1(small_config(2, false));
  const auto& base = res.W.universe;
  const int d = res.config.d;

  CHECK(res.removed.size() <= res.records.size() * static_cast<size_t>(d - 1));
  std::unordered_set<Bits, BitsHash> removed(res.removed.begin(), res.removed.end());

  for (const auto& rec : res.records) {
    rec.P.for_each([&](int slot) {
      Bits core = rec.P;
      core.reset(slot);
      core.set(base.slot_of(rec.f));
      core.set(base.slot_of(rec.g));
      FaceSet resembler = double_set(base, core);
      // a resembler swaps one doubled column for the two single cells
      CHECK((resembler & rec.I).count() == 2 * d - 2);
      // and is gone from Z wherever it appeared in Y
      for (const auto& layer : res.Z.layers)
        for (const auto& member : layer) CHECK(!(member == resembler));
    });
    // interpolation sets are never removed
    CHECK(!removed.count(rec.I));
    bool interp_present = false;
    for (const auto& member : res.Z.layers[static_cast<size_t>(rec.k - 1)])
      if (member == rec.I) interp_present = true;
    CHECK(interp_present);
  }
}

TEST_CASE("the full pipeline yields the four headline properties") {
  for (uint64_t seed : {1ull, 5ull}) {
    auto res = pipeline1(small_config(seed, true));
    CHECK(res.ell / res.config.m == res.delta);
    CHECK(as_graph(res.W).diameter() + 1 == res.ell / res.config.m);
    for (const auto& r : res.reports) {
      CAPTURE(property_name(r.property));
      CHECK(r.passed);
    }
  }
}

TEST_CASE("pipeline validates its configuration") {
  Pipeline1Config bad = small_config(1, false);
  bad.m = 2;
  CHECK_THROWS_AS((void)pipeline1(bad), Error);
  Pipeline1Config tiny = small_config(1, false);
  tiny.n = 8;
  tiny.d = 3;  // 8 triples do not merge into two layers of three designs
  CHECK_THROWS_AS((void)pipeline1(tiny), Error);
}

TEST_CASE("records serialize and render") {
  auto res = pipeline1(small_config(3, false));
  auto j = records1_to_json(res.W.universe, res.records);
  auto back = records1_from_json(res.W.universe, j);
  REQUIRE(back.size() == res.records.size());
  for (size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].I == res.records[i].I);
    CHECK(back[i].U == res.records[i].U);
  }
  auto text = render_diagrams(res.W.universe, res.records);
  CHECK(text.find("row1") != std::string::npos);
  CHECK(text.find("row2") != std::string::npos);
  CHECK(text.find("[") != std::string::npos);  // bracketed removed symbols
}

TEST_CASE("width classification and adjacent layers on sampled sets") {
  auto res = pipeline1(small_config(1, true));
  const auto& dbl = res.Z.universe;
  const auto& base = res.W.universe;
  const int d = res.config.d;

  std::unordered_set<Bits, BitsHash> corr_members;
  std::vector<std::pair<FaceSet, int>> member_layers;
  std::vector<std::pair<FaceSet, int>> interp_layers;
  for (int k = 0; k < res.Z.layer_count(); ++k)
    for (const auto& m : res.Z.layers[static_cast<size_t>(k)]) {
      if (width(dbl, m) == d) {
        corr_members.insert(m);
        member_layers.emplace_back(m, k + 1);
      } else {
        interp_layers.emplace_back(m, k + 1);
      }
    }

  auto interp_containers = [&](const FaceSet& s) {
    std::vector<int> layers;
    for (const auto& [i, k] : interp_layers)
      if (s.subset_of(i)) layers.push_back(k);
    return layers;
  };
  auto corr_container_layer = [&](const FaceSet& s) -> int {
    // a width-w set fits a correspondence set only via D of its projection
    FaceSet t = double_set(base, project(dbl, s));
    for (const auto& [m, k] : member_layers)
      if (t == m && s.subset_of(m)) return k;
    return -1;
  };

  // deterministic width-d cases: the overlap of an interpolation set with a
  // bridged correspondence set has exactly those two containers
  for (const auto& rec : res.records) {
    FaceSet with_g = rec.I & double_set(base, rec.G);
    CHECK(width(dbl, with_g) == d);
    CHECK(corr_container_layer(with_g) == rec.k + 1);
    CHECK(interp_containers(with_g) == std::vector<int>{rec.k});
    FaceSet with_f = rec.I & double_set(base, rec.F);
    CHECK(width(dbl, with_f) == d);
    CHECK(corr_container_layer(with_f) == rec.k);
    CHECK(interp_containers(with_f) == std::vector<int>{rec.k});
  }

  Rng rng(77);
  auto pool = dbl.full_mask().slots();
  for (int trial = 0; trial < 2000; ++trial) {
    // width >= d+2: nothing contains it
    {
      FaceSet s;
      for (int slot : rng.sample(pool, 2 * (d + 2))) s.set(slot);
      FaceSet proj = project(dbl, s);
      if (proj.count() >= d + 2) {
        CHECK(interp_containers(s).empty());
        // correspondence sets all have width d, so none can contain s
      }
    }
    // a subset of a member with width d+1: at most one interpolation set
    {
      const auto& [i, k] = interp_layers[rng.below(interp_layers.size())];
      FaceSet s = i;
      auto slots = s.slots();
      s.reset(slots[static_cast<size_t>(rng.below(slots.size()))]);
      if (width(dbl, s) == d + 1) {
        CHECK(interp_containers(s).size() <= 1);
        CHECK(corr_container_layer(s) == -1);
      }
    }
    // width d: at most one correspondence + one interpolation container,
    // and two containers sit in the same or adjacent layers
    {
      const auto& [m, k] = member_layers[rng.below(member_layers.size())];
      FaceSet s = m;
      auto slots = s.slots();
      for (int drop = rng.below_int(3); drop > 0; --drop) {
        slots = s.slots();
        s.reset(slots[static_cast<size_t>(rng.below(slots.size()))]);
      }
      if (width(dbl, s) == d) {
        auto interp = interp_containers(s);
        int corr = corr_container_layer(s);
        CHECK(interp.size() <= 1);
        std::vector<int> all = interp;
        if (corr >= 0) all.push_back(corr);
        if (all.size() == 2) CHECK(std::abs(all[0] - all[1]) <= 1);
      }
    }
  }
}
