#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "largeset/catalog.hpp"
#include "largeset/ramsey.hpp"
#include "test_util.hpp"

using namespace largeset;
using namespace testutil;

namespace {

PairColoring load_pentagon() {
  std::ifstream in(std::string(LARGESET_FIXTURE_DIR) + "/pentagon_k5.json");
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return PairColoring::from_json(j);
}

}  // namespace

TEST_CASE("find_homogeneous basics") {
  std::vector<int64_t> vs = {1, 2, 3, 4, 5};
  PairColoring mono = PairColoring::from_function(vs, 2, [](int64_t, int64_t) { return 0; });
  for (int s = 2; s <= 5; ++s) {
    auto r = find_homogeneous(mono, s);
    REQUIRE(r.status == HomogeneousResult::Status::found);
    CHECK(static_cast<int>(r.subset.size()) == s);
    CHECK(r.color == 0);
  }
  // the classical two-coloring of the pairs of a 5-set without a
  // monochromatic triple
  PairColoring pent = load_pentagon();
  auto r = find_homogeneous(pent, 3);
  CHECK(r.status == HomogeneousResult::Status::none);
  // parity-sum coloring: three even numbers land on color 0
  std::vector<int64_t> w = {0, 1, 2, 3, 4, 5, 6};
  PairColoring parity = PairColoring::from_function(
      w, 2, [](int64_t x, int64_t y) { return static_cast<int>((x + y) & 1); });
  auto p = find_homogeneous(parity, 3);
  REQUIRE(p.status == HomogeneousResult::Status::found);
  CHECK(p.subset == std::vector<int64_t>{0, 2, 4});
  CHECK(p.color == 0);
}

TEST_CASE("found homogeneous sets re-verify by direct evaluation") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int64_t> vs;
    for (int64_t i = 0; i < 8; ++i) vs.push_back(i);
    uint64_t salt = rng.next();
    PairColoring c = PairColoring::from_function(vs, 2, [salt](int64_t x, int64_t y) {
      uint64_t h = (static_cast<uint64_t>(x) * 1000003 + static_cast<uint64_t>(y)) ^ salt;
      h *= 0x9e3779b97f4a7c15ULL;
      return static_cast<int>((h >> 17) & 1);
    });
    auto r = find_homogeneous(c, 3);
    if (r.status == HomogeneousResult::Status::found) {
      for (size_t i = 0; i < r.subset.size(); ++i)
        for (size_t j = i + 1; j < r.subset.size(); ++j)
          CHECK(c.color_of(r.subset[i], r.subset[j]) == r.color);
    } else {
      // exhaustive cross-check: no triple is monochromatic
      for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b)
          for (size_t d = b + 1; d < vs.size(); ++d) {
            int c1 = c.color_of(vs[a], vs[b]);
            bool mono = c1 == c.color_of(vs[a], vs[d]) && c1 == c.color_of(vs[b], vs[d]);
            CHECK_FALSE(mono);
          }
    }
  }
}

TEST_CASE("ramsey_bound_search") {
  auto r22 = ramsey_bound_search(2, 2, 4);
  REQUIRE(r22.decided);
  CHECK(*r22.value == 2);
  // one color: the bound is s itself
  auto r13 = ramsey_bound_search(1, 3, 5);
  REQUIRE(r13.decided);
  CHECK(*r13.value == 3);
  // the classical value: exhaustive over 5-vertex colorings finds a
  // counterexample, over 6-vertex colorings finds none
  auto r23 = ramsey_bound_search(2, 3, 6);
  REQUIRE(r23.decided);
  CHECK(*r23.value == 6);
  CHECK(r23.lower_bound == 5);
  REQUIRE(r23.lower_bound_witness.has_value());
  CHECK(find_homogeneous(*r23.lower_bound_witness, 3).status ==
        HomogeneousResult::Status::none);
  // starved budget leaves the question open
  auto tiny = ramsey_bound_search(2, 3, 6, 50);
  CHECK_FALSE(tiny.decided);
}

TEST_CASE("the shipped 5-set coloring is triangle-free in both colors") {
  PairColoring pent = load_pentagon();
  for (int color = 0; color <= 1; ++color) {
    BitGraph g = pent.color_class_graph(color);
    CHECK(g.edge_count() == 5);
    CHECK(brute_max_clique(g) == 2);
  }
}

TEST_CASE("arrow_check outcomes") {
  std::vector<int64_t> vs = {0, 1, 2, 3, 4, 5, 6, 7};
  // partition coloring by S = {0,1,2,3}: 0 inside S and inside the
  // complement, 1 across
  auto in_s = [](int64_t x) { return x <= 3; };
  PairColoring part = PairColoring::from_function(vs, 2, [&](int64_t x, int64_t y) {
    return in_s(x) == in_s(y) ? 0 : 1;
  });
  FilterBase base = FilterBase::of({{0, 1, 2}, {4, 5}});
  auto a = arrow_check(base, part, 3);
  CHECK(a.kind == ArrowResult::Kind::base_zero_homogeneous);
  CHECK(a.base_set == std::vector<int64_t>{0, 1, 2});
  // all-ones coloring: outcome (b) for lambda <= |V|
  PairColoring ones = PairColoring::from_function(vs, 2, [](int64_t, int64_t) { return 1; });
  auto b = arrow_check(base, ones, 5);
  CHECK(b.kind == ArrowResult::Kind::big_one_homogeneous);
  CHECK(b.one_set.size() == 5);
  for (size_t i = 0; i < b.one_set.size(); ++i)
    for (size_t j = i + 1; j < b.one_set.size(); ++j)
      CHECK(ones.color_of(b.one_set[i], b.one_set[j]) == 1);
  // neither: pentagon with an insufficient base
  PairColoring pent = load_pentagon();
  FilterBase whole = FilterBase::of({{1, 2, 3, 4, 5}});
  auto c = arrow_check(whole, pent, 3);
  CHECK(c.kind == ArrowResult::Kind::base_insufficient);
  CHECK(c.one_set.size() == 2);  // the largest 1-homogeneous set is an edge
}

TEST_CASE("ramsey_filter_check") {
  std::vector<int64_t> vs = {0, 1, 2, 3, 4, 5};
  PairColoring mono = PairColoring::from_function(vs, 2, [](int64_t, int64_t) { return 0; });
  FilterBase whole = FilterBase::of({{0, 1, 2, 3, 4, 5}});
  auto r1 = ramsey_filter_check(whole, {mono});
  CHECK(r1.consistent);
  CHECK(r1.base_index == std::vector<int>{0});

  // two disjoint halves with the partition coloring: each half is
  // 0-homogeneous
  auto in_s = [](int64_t x) { return x <= 2; };
  PairColoring part = PairColoring::from_function(vs, 2, [&](int64_t x, int64_t y) {
    return in_s(x) == in_s(y) ? 0 : 1;
  });
  FilterBase halves = FilterBase::of({{0, 1, 2}, {3, 4, 5}});
  auto r2 = ramsey_filter_check(halves, {part});
  CHECK(r2.consistent);
  CHECK(r2.base_index == std::vector<int>{0});
  CHECK(r2.base_color == std::vector<int>{0});

  // pentagon coloring against a whole-window base: counterexample
  PairColoring pent = load_pentagon();
  FilterBase base5 = FilterBase::of({{1, 2, 3, 4, 5}});
  auto r3 = ramsey_filter_check(base5, {pent});
  CHECK_FALSE(r3.consistent);
  CHECK(r3.counterexample_coloring == 0);
}

TEST_CASE("max_homogeneous_letter_set") {
  std::vector<int64_t> letters;
  for (int64_t l = 0; l <= 12; ++l) letters.push_back(l);
  // every 2-letter word present: the whole letter set comes back
  SetSpec whole = whole_group(GroupCtx::booleans(), Window::boolean_ball(2, 0, 12));
  auto everything = max_homogeneous_letter_set(whole, letters);
  CHECK(everything.letters == letters);
  // no 2-letter words at all: a single letter
  SetSpec none = make_length_filtered(LengthSet::of_list({3}));
  auto single = max_homogeneous_letter_set(none, letters);
  CHECK(single.letters == std::vector<int64_t>{0});
  // cube-difference letter graph vs the subset-DP oracle
  SetSpec cube = make_cube_gap_complement();
  BitGraph g(13);
  for (int i = 0; i <= 12; ++i)
    for (int j = i + 1; j <= 12; ++j)
      if (member(cube, W({i, j}))) g.add_edge(i, j);
  int oracle = brute_max_clique(g);
  auto got = max_homogeneous_letter_set(cube, letters);
  CHECK(static_cast<int>(got.letters.size()) == oracle);
  for (size_t i = 0; i < got.letters.size(); ++i)
    for (size_t j = i + 1; j < got.letters.size(); ++j)
      CHECK(member(cube, W({got.letters[i], got.letters[j]})));
}

TEST_CASE("coloring json round-trip and totality validation") {
  PairColoring pent = load_pentagon();
  PairColoring back = PairColoring::from_json(pent.to_json());
  CHECK(back.vertices() == pent.vertices());
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) CHECK(back.color_at(i, j) == pent.color_at(i, j));
  nlohmann::json bad = pent.to_json();
  bad["pairs"].erase(0);
  CHECK_THROWS_AS(PairColoring::from_json(bad), precondition_error);
}

TEST_CASE("six colors at desk scale stay undecided with a lower-bound witness") {
  auto r = ramsey_bound_search(6, 3, 10, 2000000);
  CHECK_FALSE(r.decided);
  CHECK(r.lower_bound >= 5);
  REQUIRE(r.lower_bound_witness.has_value());
  CHECK(find_homogeneous(*r.lower_bound_witness, 3).status ==
        HomogeneousResult::Status::none);
}

TEST_CASE("arrow certificates re-verify by direct pair enumeration") {
  std::vector<int64_t> vs = {0, 1, 2, 3, 4, 5, 6, 7};
  auto in_s = [](int64_t x) { return x <= 3; };
  PairColoring part = PairColoring::from_function(vs, 2, [&](int64_t x, int64_t y) {
    return in_s(x) == in_s(y) ? 0 : 1;
  });
  FilterBase base = FilterBase::of({{0, 1, 2}, {4, 5}});
  auto a = arrow_check(base, part, 3);
  REQUIRE(a.kind == ArrowResult::Kind::base_zero_homogeneous);
  for (size_t i = 0; i < a.base_set.size(); ++i)
    for (size_t j = i + 1; j < a.base_set.size(); ++j)
      CHECK(part.color_of(a.base_set[i], a.base_set[j]) == 0);
}
