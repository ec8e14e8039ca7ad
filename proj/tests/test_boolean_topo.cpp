#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "largeset/boolean_topo.hpp"
#include "largeset/catalog.hpp"
#include "largeset/verify.hpp"
#include "test_util.hpp"

using namespace largeset;
using namespace testutil;

TEST_CASE("neighborhood trace at depth 1") {
  NeighborhoodSpec spec{{{1, 2}}, 1};
  FiniteSet trace = neighborhood_trace(spec, Window::boolean_ball(2, 0, 5));
  // pairs over {1,2,*}: the empty word, {1,2}, and the two star words
  CHECK(trace.size() == 4);
  CHECK(trace.contains(W({})));
  CHECK(trace.contains(W({1, 2})));
  CHECK(trace.contains(W({1, star_letter})));
  CHECK(trace.contains(W({2, star_letter})));
  // starless restriction
  FiniteSet starless = neighborhood_trace(spec, Window::boolean_ball(2, 0, 5), false);
  CHECK(starless == FS({W({}), W({1, 2})}));
  // empty letter set: only the star cancellation survives
  NeighborhoodSpec empty{{{}}, 1};
  CHECK(neighborhood_trace(empty, Window::boolean_ball(2, 0, 5), false) == FS({W({})}));
}

TEST_CASE("even sphere traces") {
  CHECK(even_sphere_trace({1, 2, 3}, 1) == FS({W({1, 2}), W({1, 3}), W({2, 3})}));
  CHECK(even_sphere_trace({1, 2, 3}, 2).empty());  // |A| < 2n
  CHECK(even_sphere_trace({1, 2, 3, 4, 5, 6}, 2).size() == 15);  // C(6,4)
}

TEST_CASE("even sphere lies inside the corresponding neighborhood trace") {
  std::vector<int64_t> A = {1, 2, 3, 4, 5, 6, 7};
  for (int n = 1; n <= 3; ++n) {
    NeighborhoodSpec spec{std::vector<std::vector<int64_t>>(static_cast<size_t>(n), A), n};
    FiniteSet trace =
        neighborhood_trace(spec, Window::boolean_ball(2 * n, 1, 7), true, 2000000);
    for (const Element& g : even_sphere_trace(A, n)) CHECK(trace.contains(g));
  }
}

TEST_CASE("two_words_decompose on letter systems") {
  WordSystem ws = WordSystem::of({W({1}), W({2}), W({3})});
  TwoWordsResult r = two_words_decompose(ws);
  REQUIRE(r.kind == TwoWordsResult::Kind::letters);
  CHECK(r.letters == std::vector<int64_t>{1, 2, 3});
}

TEST_CASE("two_words_decompose exceptional four-word case") {
  WordSystem ws = WordSystem::of({W({1}), W({2}), W({3}), W({1, 2, 3})});
  TwoWordsResult r = two_words_decompose(ws);
  REQUIRE(r.kind == TwoWordsResult::Kind::exceptional_k4);
  CHECK(r.letters == std::vector<int64_t>{1, 2, 3});
  // recomputed sums: w1^w4 = {2,3} = x2^x3, and the third relation pairs
  // the first two letters
  CHECK(ws.pair_sum(0, 3) == W({2, 3}));
  CHECK(ws.pair_sum(2, 3) == W({1, 2}));
  // no four-letter representation exists
  CHECK_FALSE(two_words_brute_letters(ws).has_value());
}

TEST_CASE("two_words_decompose flags non-two-letter sums") {
  WordSystem ws = WordSystem::of({W({1}), W({2, 3, 4})});
  TwoWordsResult r = two_words_decompose(ws);
  REQUIRE(r.kind == TwoWordsResult::Kind::not_applicable);
  CHECK(r.offending_pair == std::pair<int, int>{0, 1});
}

TEST_CASE("translated systems decompose and agree with the support oracle") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + static_cast<int>(rng.below(11));
    std::set<int64_t> xs;
    while (static_cast<int>(xs.size()) < k) xs.insert(rng.range(-20, 20));
    std::vector<int64_t> t_letters;
    for (int64_t l = -20; l <= 20; ++l)
      if (rng.below(8) == 0) t_letters.push_back(l);
    Element t = Element::word(t_letters);
    std::vector<Element> words;
    for (int64_t x : xs) words.push_back(op(t, Element::word({x})));
    WordSystem ws = WordSystem::of(words);
    TwoWordsResult got = two_words_decompose(ws);
    auto oracle = two_words_brute_letters(ws);
    REQUIRE(got.kind == TwoWordsResult::Kind::letters);
    REQUIRE(oracle.has_value());
    for (size_t i = 0; i < ws.size(); ++i)
      for (size_t j = i + 1; j < ws.size(); ++j) {
        REQUIRE(ws.pair_sum(i, j) == W({got.letters[i], got.letters[j]}));
        REQUIRE(ws.pair_sum(i, j) == W({(*oracle)[i], (*oracle)[j]}));
      }
  }
}

TEST_CASE("c_set_from_coloring") {
  std::vector<int64_t> vs = {1, 2, 3, 4};
  PairColoring zero = PairColoring::from_function(vs, 2, [](int64_t, int64_t) { return 0; });
  SetSpec whole = c_set_from_coloring(zero);
  CHECK(member(whole, W({1, 2})));
  CHECK(member(whole, W({})));
  PairColoring one = PairColoring::from_function(vs, 2, [](int64_t, int64_t) { return 1; });
  SetSpec punctured = c_set_from_coloring(one);
  CHECK_FALSE(member(punctured, W({1, 2})));
  CHECK_FALSE(member(punctured, W({3, 4})));
  CHECK(member(punctured, W({1, 2, 3})));
  CHECK(member(punctured, W({5, 9})));  // letters outside the coloring
  // partition coloring: the surviving two-letter words are those inside
  // one part
  auto in_s = [](int64_t x) { return x <= 2; };
  PairColoring part = PairColoring::from_function(vs, 2, [&](int64_t x, int64_t y) {
    return in_s(x) == in_s(y) ? 0 : 1;
  });
  SetSpec cs = c_set_from_coloring(part);
  CHECK(member(cs, W({1, 2})));
  CHECK(member(cs, W({3, 4})));
  CHECK_FALSE(member(cs, W({1, 3})));
  CHECK_FALSE(member(cs, W({2, 4})));
}

TEST_CASE("b4 quadruple and arrangement colorings") {
  CHECK(b4_quadruple_coloring(W({1, 2, 3, 4}), W({3, 4, 5, 6})) ==
        B4Quadruple{1, 2, 3, 4});
  CHECK(b4_arrangement_coloring(W({1, 2, 3, 4}), W({3, 4, 5, 6})) == 12);
  CHECK(b4_arrangement_coloring(W({3, 4, 5, 6}), W({1, 2, 3, 4})) == 34);
  CHECK(b4_quadruple_coloring(W({1, 5, 6, 9}), W({2, 5, 6, 11})) ==
        B4Quadruple{1, 4, 1, 4});
  CHECK(b4_arrangement_coloring(W({1, 5, 6, 9}), W({2, 5, 6, 11})) == 13);
  CHECK_THROWS_AS(b4_quadruple_coloring(W({1, 2, 3, 4}), W({1, 2, 3, 4})),
                  precondition_error);
  CHECK_THROWS_AS(b4_quadruple_coloring(W({1, 2, 3, 4}), W({5, 6, 7, 8})),
                  precondition_error);
  CHECK_THROWS_AS(b4_quadruple_coloring(W({1, 2, 3}), W({3, 4, 5, 6})),
                  precondition_error);
}

TEST_CASE("b4 palettes and order-preserving relabeling invariance") {
  // exhaustive corpus: all pairs of 4-subsets of {0..7} sharing exactly
  // two letters
  std::set<std::array<int, 4>> quadruples;
  std::set<int> arrangements;
  auto subsets4 = even_sphere_trace({0, 1, 2, 3, 4, 5, 6, 7}, 2);
  for (const Element& wi : subsets4) {
    for (const Element& wj : subsets4) {
      if (wi == wj || op(wi, wj).letters().size() != 4) continue;
      B4Quadruple q = b4_quadruple_coloring(wi, wj);
      CHECK(q.i1 < q.i2);
      CHECK(q.j1 < q.j2);
      quadruples.insert({q.i1, q.i2, q.j1, q.j2});
      int a = b4_arrangement_coloring(wi, wj);
      arrangements.insert(a);
      // doubling every letter preserves order, so both colors survive
      auto doubled = [](const Element& w) {
        std::vector<int64_t> ls;
        for (int64_t l : w.letters()) ls.push_back(2 * l);
        return Element::word(ls);
      };
      CHECK(b4_quadruple_coloring(doubled(wi), doubled(wj)) == q);
      CHECK(b4_arrangement_coloring(doubled(wi), doubled(wj)) == a);
    }
  }
  CHECK(quadruples.size() == 36);
  CHECK(arrangements == std::set<int>{12, 13, 14, 23, 24, 34});
}

TEST_CASE("c4_set_from_coloring") {
  std::vector<int64_t> vs = {1, 2, 3, 4};
  PairColoring zero = PairColoring::from_function(vs, 2, [](int64_t, int64_t) { return 0; });
  SetSpec empty4 = c4_set_from_coloring(zero);
  CHECK_FALSE(member(empty4, W({1, 2, 3, 4})));
  // the spelled-out assignment satisfying all three inequalities
  PairColoring mixed = PairColoring::from_function(vs, 2, [](int64_t x, int64_t y) {
    if (x == 1 && y == 2) return 0;
    if (x == 3 && y == 4) return 1;
    if (x == 1 && y == 3) return 0;
    if (x == 2 && y == 4) return 1;
    if (x == 1 && y == 4) return 0;
    return 1;  // {2,3}
  });
  SetSpec c4 = c4_set_from_coloring(mixed);
  CHECK(member(c4, W({1, 2, 3, 4})));
  CHECK_FALSE(member(c4, W({1, 2, 3})));
  CHECK_FALSE(member(c4, W({})));
}

TEST_CASE("trace containment") {
  Window w = Window::boolean_ball(2, 0, 9);
  std::vector<int64_t> vs;
  for (int64_t l = 0; l <= 9; ++l) vs.push_back(l);
  SetSpec everything = whole_group(GroupCtx::booleans(), w);
  FilterBase base = FilterBase::of({{0, 1, 2}, {3, 4, 5}});
  TraceContainment t1 = trace_containment_check(everything, base, 1, w);
  CHECK(t1.contained);
  CHECK(t1.base_index == 0);
  // a coloring whose 0-homogeneous part matches the first base element
  PairColoring c = PairColoring::from_function(vs, 2, [](int64_t x, int64_t y) {
    return (x <= 2 && y <= 2) ? 0 : 1;
  });
  TraceContainment t2 = trace_containment_check(c_set_from_coloring(c), base, 1, w);
  CHECK(t2.contained);
  CHECK(t2.base_index == 0);
  // a set missing a pair from every base element
  SetSpec gap = complement(from_finite("gaps", GroupCtx::booleans(),
                                       FS({W({0, 1}), W({3, 4})}), w));
  TraceContainment t3 = trace_containment_check(gap, base, 1, w);
  CHECK_FALSE(t3.contained);
  REQUIRE(t3.uncovered.has_value());
  CHECK(*t3.uncovered == W({0, 1}));
}

TEST_CASE("word system json round-trip") {
  WordSystem ws = WordSystem::of({W({1, 2}), W({3}), W({})});
  WordSystem back = WordSystem::from_json(ws.to_json());
  REQUIRE(back.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(back.word(i) == ws.word(i));
}

TEST_CASE("the exceptional configuration is found under index permutation") {
  // the dependent word sits first, not last
  Element w1 = W({1}), w2 = W({2}), w3 = W({3});
  Element w4 = op(op(w1, w2), w3);
  WordSystem permuted = WordSystem::of({w4, w1, w2, w3});
  TwoWordsResult r = two_words_decompose(permuted);
  REQUIRE(r.kind == TwoWordsResult::Kind::exceptional_k4);
  std::vector<int64_t> sorted = r.letters;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int64_t>{1, 2, 3});
  CHECK_FALSE(two_words_brute_letters(permuted).has_value());
}
