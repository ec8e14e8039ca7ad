#ifndef LARGESET_RAMSEY_HPP
#define LARGESET_RAMSEY_HPP

#include <optional>

#include <json.hpp>

#include "largeset/bitgraph.hpp"
#include "largeset/set_spec.hpp"

namespace largeset {

// Total coloring of the unordered pairs of a finite vertex set.
class PairColoring {
 public:
  PairColoring() = default;
  // all pairs start at color 0
  static PairColoring make(std::vector<int64_t> vertices, int colors);
  static PairColoring from_function(std::vector<int64_t> vertices, int colors,
                                    const std::function<int(int64_t, int64_t)>& fn);

  const std::vector<int64_t>& vertices() const { return vertices_; }
  int colors() const { return colors_; }
  int index_of(int64_t label) const;  // -1 when absent

  int color_at(int i, int j) const;  // by vertex index
  void set_color_at(int i, int j, int color);
  int color_of(int64_t u, int64_t v) const;  // by label

  // Graph of the pairs carrying one color.
  BitGraph color_class_graph(int color) const;

  nlohmann::json to_json() const;
  static PairColoring from_json(const nlohmann::json& j);

 private:
  size_t slot(int i, int j) const;
  std::vector<int64_t> vertices_;
  int colors_ = 2;
  std::vector<uint8_t> assign_;
};

// Finite decreasing-by-convention list of letter sets approximating a
// filter; only nonemptiness is checked (uniformity has no finite analog).
struct FilterBase {
  std::vector<std::vector<int64_t>> sets;

  static FilterBase of(std::vector<std::vector<int64_t>> sets);
};

struct HomogeneousResult {
  enum class Status { found, none, undecided };
  Status status = Status::none;
  std::vector<int64_t> subset;
  int color = -1;
};

// An s-subset with all pairs one color, or none (exhaustive). Witnesses
// are lexicographically least, lower color breaking ties.
HomogeneousResult find_homogeneous(const PairColoring& c, int s,
                                   uint64_t node_budget = 50000000);

struct RamseyBoundResult {
  bool decided = false;
  std::optional<int> value;
  // the largest n for which an s-homogeneous-free coloring was found,
  // with that coloring as certificate
  int lower_bound = 0;
  std::optional<PairColoring> lower_bound_witness;
};

// Least n <= nmax such that every r-coloring of the pairs of an n-set has
// an s-homogeneous subset. Exhaustive search over colorings with
// color-first-use symmetry pruning and incremental homogeneity cuts.
RamseyBoundResult ramsey_bound_search(int r, int s, int nmax,
                                      uint64_t node_budget = 50000000);

struct ArrowResult {
  enum class Kind { base_zero_homogeneous, big_one_homogeneous, base_insufficient };
  Kind kind = Kind::base_insufficient;
  std::vector<int64_t> base_set;  // outcome (a)
  std::vector<int64_t> one_set;   // outcome (b), or the maximal found for (c)
};

// (a) a base element all of whose pairs are colored 0, else (b) a set of
// size >= lambda with all pairs colored 1, else (c) base insufficient with
// the maximum 1-homogeneous set found.
ArrowResult arrow_check(const FilterBase& base, const PairColoring& c, int lambda,
                        uint64_t node_budget = 50000000);

struct RamseyFilterReport {
  bool consistent = true;
  // per coloring: index of the first homogeneous base element, or -1
  std::vector<int> base_index;
  std::vector<int> base_color;
  int counterexample_coloring = -1;
};

RamseyFilterReport ramsey_filter_check(const FilterBase& base,
                                       const std::vector<PairColoring>& colorings);

struct LetterCliqueResult {
  std::vector<int64_t> letters;
  bool exact = true;
};

// Maximum clique in the letter graph with an edge {x,y} when the
// two-letter word {x,y} belongs to A; all its pairs land in A.
LetterCliqueResult max_homogeneous_letter_set(const SetSpec& A,
                                              const std::vector<int64_t>& letters,
                                              uint64_t node_budget = 50000000);

}  // namespace largeset

#endif
