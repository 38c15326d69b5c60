#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "spg/enumerate.hpp"
#include "spg/error.hpp"
#include "spg/json_io.hpp"
#include "spg/ops.hpp"

using namespace spg;
using test::dface;
using test::face;
using test::make_family;

TEST_CASE("bits basics") {
  Bits b;
  CHECK(b.empty());
  b.set(3);
  b.set(200);
  CHECK(b.count() == 2);
  CHECK(b.test(200));
  CHECK(b.next(0) == 3);
  CHECK(b.next(4) == 200);
  CHECK(b.next(201) == -1);
  Bits c = b;
  c.set(10);
  CHECK(b.subset_of(c));
  CHECK(!c.subset_of(b));
  CHECK((c - b).count() == 1);
}

TEST_CASE("canonical order is ascending-sequence lexicographic") {
  auto u = SymbolUniverse::plain(8);
  CHECK(face(u, {1}).canonical_less(face(u, {1, 2})));
  CHECK(face(u, {1, 2}).canonical_less(face(u, {1, 3})));
  CHECK(face(u, {1, 3}).canonical_less(face(u, {2})));
  CHECK(!face(u, {2}).canonical_less(face(u, {2})));
}

TEST_CASE("doubling expands by rows") {
  auto u = SymbolUniverse::plain(4);
  auto d = u.doubled_version();
  CHECK(double_set(u, face(u, {1, 3})) == dface(d, {{1, 1}, {2, 1}, {1, 3}, {2, 3}}));
  CHECK(double_set(u, FaceSet{}) == FaceSet{});
  CHECK_THROWS_AS((void)double_set(d, FaceSet{}), Error);
}

TEST_CASE("projection is the direct image") {
  auto u = SymbolUniverse::doubled(6);
  CHECK(project(u, dface(u, {{1, 2}, {2, 2}, {1, 5}})) == face(u.base_version(), {2, 5}));
  CHECK(project(u, FaceSet{}) == FaceSet{});
  CHECK_THROWS_AS((void)project(SymbolUniverse::plain(6), FaceSet{}), Error);
}

TEST_CASE("projection inverts doubling; size sandwich") {
  auto u = SymbolUniverse::plain(10);
  auto d = u.doubled_version();
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    FaceSet c = test::random_face(rng, u, rng.below_int(11));
    CHECK(project(d, double_set(u, c)) == c);

    FaceSet s = test::random_face(rng, d, rng.below_int(21));
    int w = width(d, s);
    CHECK(w <= s.count());
    CHECK(s.count() <= 2 * w);
    // double-then-project contains the original, with equality iff two full rows
    FaceSet closure = double_set(u, project(d, s));
    CHECK(s.subset_of(closure));
    CHECK((closure == s) == (both_rows_columns(d, s).count() == w));
  }
}

TEST_CASE("width of doubled and empty sets") {
  auto u = SymbolUniverse::plain(9);
  auto d = u.doubled_version();
  FaceSet c = face(u, {2, 4, 6, 8});
  CHECK(width(d, double_set(u, c)) == 4);
  CHECK(width(d, FaceSet{}) == 0);
}

TEST_CASE("A/B widths split the projection") {
  auto u = SymbolUniverse::bipartite(3, 3);
  auto d = u.doubled_version();
  FaceSet s = dface(d, {{1, 1}, {2, 2}, {1, 4}, {2, 4}, {1, 6}});
  CHECK(awidth(d, s) == 2);
  CHECK(bwidth(d, s) == 2);
  CHECK(awidth(d, s) + bwidth(d, s) == width(d, s));
  CHECK_THROWS_AS((void)bwidth(SymbolUniverse::doubled(6), s), Error);
}

TEST_CASE("active layers") {
  auto u = SymbolUniverse::plain(4);
  auto fam = make_family(u, 2, {{{1, 2}}, {{2, 3}}, {{1, 3}}});
  CHECK(active_layers(fam, FaceSet{}) == std::vector<int>{1, 2, 3});
  CHECK(active_layers(fam, face(u, {1})) == std::vector<int>{1, 3});
  CHECK(active_layers(fam, face(u, {4})).empty());
}

TEST_CASE("active layers are antitone in the candidate") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    auto fam = test::random_family(rng);
    FaceSet big = test::random_face(rng, fam.universe, std::min(fam.d, 3));
    FaceSet small = big;
    if (int s = big.next(0); s >= 0) small.reset(s);
    auto act_big = active_layers(fam, big);
    auto act_small = active_layers(fam, small);
    for (int k : act_big) CHECK(std::find(act_small.begin(), act_small.end(), k) != act_small.end());
  }
}

TEST_CASE("path diameter equals layer count minus one") {
  auto u = SymbolUniverse::plain(6);
  auto fam = make_family(u, 2, {{{1, 2}}, {{2, 3}}, {{3, 4}}, {{4, 5}}});
  auto g = as_graph(fam);
  CHECK(g.diameter() == 3);
  auto hr = g.hirsch_ratio();
  CHECK(hr.num == 1);
  CHECK(hr.den == 2);
}

TEST_CASE("family validation rejects broken input") {
  auto u = SymbolUniverse::plain(5);
  auto dup = make_family(u, 2, {{{1, 2}}, {{1, 2}}});
  CHECK_THROWS_AS(dup.validate(), Error);
  auto wrong_card = make_family(u, 2, {{{1, 2, 3}}});
  CHECK_THROWS_AS(wrong_card.validate(), Error);
  auto bad_sections = make_family(u, 2, {{{1, 2}}, {{2, 3}}}, {2, 1});
  CHECK_THROWS_AS(bad_sections.validate(), Error);
}

TEST_CASE("partition invariant over constructed families") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    auto fam = test::random_family(rng);
    CHECK_NOTHROW(fam.validate());
  }
}

TEST_CASE("enumerate active candidates") {
  auto u = SymbolUniverse::plain(5);
  SUBCASE("single triple, size two") {
    auto fam = make_family(u, 3, {{{1, 2, 3}}});
    auto got = enumerate_active_candidates(fam, 2);
    CHECK(got.size() == 7);  // empty set, three singletons, three pairs
  }
  SUBCASE("full powerset of one member") {
    auto fam = make_family(u, 4, {{{1, 2, 3, 4}}});
    auto got = enumerate_active_candidates(fam, 4);
    CHECK(got.size() == 16);
  }
  SUBCASE("deduplicates across members") {
    auto fam = make_family(u, 2, {{{1, 2}, {2, 3}}});
    auto got = enumerate_active_candidates(fam, 1);
    CHECK(got.size() == 4);  // empty, {1}, {2}, {3}
  }
  SUBCASE("budget error") {
    auto fam = make_family(u, 4, {{{1, 2, 3, 4}}});
    CHECK_THROWS_AS((void)enumerate_active_candidates(fam, 4, 5), Error);
  }
}

TEST_CASE("family json round trip") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    for (auto opt : {test::RandomFamilyOptions{}, test::RandomFamilyOptions{true, false},
                     test::RandomFamilyOptions{false, true}}) {
      auto fam = test::random_family(rng, opt);
      auto j = family_to_json(fam);
      auto back = family_from_json(j);
      CHECK(back.universe == fam.universe);
      CHECK(back.d == fam.d);
      CHECK(back.sections == fam.sections);
      REQUIRE(back.layer_count() == fam.layer_count());
      fam.sort_members();
      for (int k = 0; k < fam.layer_count(); ++k)
        CHECK(back.layers[static_cast<size_t>(k)] == fam.layers[static_cast<size_t>(k)]);
      CHECK(family_to_json(back) == j);
    }
  }
}

TEST_CASE("doubled faces serialize as row:symbol strings") {
  auto d = SymbolUniverse::doubled(4);
  auto j = face_to_json(d, dface(d, {{2, 3}, {1, 1}}));
  CHECK(j.dump() == R"(["1:1","2:3"])");
}
