#ifndef LARGESET_BOOLEAN_TOPO_HPP
#define LARGESET_BOOLEAN_TOPO_HPP

#include <optional>
#include <utility>

#include "largeset/ramsey.hpp"
#include "largeset/set_spec.hpp"

namespace largeset {

// Letter sets A_1..A_n standing for the zero-neighborhood data V_i =
// A_i u {*}; traces are truncated at `depth` layers.
struct NeighborhoodSpec {
  std::vector<std::vector<int64_t>> letter_sets;
  int depth = 1;
};

// A list of Boolean words with their pairwise sums cached.
class WordSystem {
 public:
  static WordSystem of(std::vector<Element> words);

  size_t size() const { return words_.size(); }
  const std::vector<Element>& words() const { return words_; }
  const Element& word(size_t i) const { return words_[i]; }
  const Element& pair_sum(size_t i, size_t j) const;

  nlohmann::json to_json() const;
  static WordSystem from_json(const nlohmann::json& j);

 private:
  std::vector<Element> words_;
  std::vector<Element> sums_;  // row-major upper triangle
};

// All words x_1^y_1^...^x_k^y_k with k <= depth and x_i, y_i in
// A_i u {*}, restricted to the window. The star is a reserved letter and
// cancels in pairs; words keeping a star are admitted when
// include_star_words is set (their non-star letters must fit the window).
FiniteSet neighborhood_trace(const NeighborhoodSpec& spec, const Window& w,
                             bool include_star_words = true,
                             uint64_t cap = default_window_cap());

// All 2n-letter words over the letter set A.
FiniteSet even_sphere_trace(const std::vector<int64_t>& letters, int n);

struct TwoWordsResult {
  enum class Kind { letters, exceptional_k4, not_applicable };
  Kind kind = Kind::not_applicable;
  // kind == letters: x_1..x_k with w_i ^ w_j = x_i ^ x_j for all i < j
  // kind == exceptional_k4: the three letters x_1, x_2, x_3
  std::vector<int64_t> letters;
  // kind == not_applicable: the first pair whose sum is not a 2-letter word
  std::pair<int, int> offending_pair{-1, -1};
};

// Decision procedure for systems whose pairwise sums are two-letter
// words: produces representing letters, or detects the exceptional
// four-word configuration w_1^w_2^w_3^w_4 = 0 (whose six pairwise sums
// are recomputed from the words, never assumed).
TwoWordsResult two_words_decompose(const WordSystem& ws);

// C' = everything except the words x^y with c({x,y}) = 1.
SetSpec c_set_from_coloring(const PairColoring& c);

struct B4Quadruple {
  int i1 = 0, i2 = 0, j1 = 0, j2 = 0;  // 1-based letter positions

  friend bool operator==(const B4Quadruple& a, const B4Quadruple& b) {
    return a.i1 == b.i1 && a.i2 == b.i2 && a.j1 == b.j1 && a.j2 == b.j2;
  }
};

// For 4-letter words with a 4-letter sum: the positions (in increasing
// letter order) of the two surviving letters inside each word. 36
// possible values.
B4Quadruple b4_quadruple_coloring(const Element& wi, const Element& wj);

// Positions of wi's surviving letters within the 4-letter sum, encoded as
// two digits; one of 12, 13, 14, 23, 24, 34.
int b4_arrangement_coloring(const Element& wi, const Element& wj);

// 4-letter words a1<a2<a3<a4 with c({a1,a2}) != c({a3,a4}),
// c({a1,a3}) != c({a2,a4}) and c({a1,a4}) != c({a2,a3}).
SetSpec c4_set_from_coloring(const PairColoring& c);

struct TraceContainment {
  bool contained = false;
  int base_index = -1;                 // certificate when contained
  std::optional<Element> uncovered;    // certificate otherwise
  bool zero_missing = false;
  nlohmann::json per_base = nlohmann::json::array();

  nlohmann::json to_json() const;
};

// Whether the even-sphere traces of some base set A (over spheres 2m,
// m <= n) all land inside fatSet, within the window.
TraceContainment trace_containment_check(const SetSpec& fat_set, const FilterBase& base,
                                         int n, const Window& w);

}  // namespace largeset

#endif
