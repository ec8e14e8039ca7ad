#ifndef LARGESET_BITGRAPH_HPP
#define LARGESET_BITGRAPH_HPP

#include <cstdint>
#include <vector>

namespace largeset {

using Mask = std::vector<uint64_t>;

namespace bits {

Mask make_mask(int n, bool full);
bool test(const Mask& m, int i);
void set(Mask& m, int i);
void reset(Mask& m, int i);
int popcount(const Mask& m);
bool empty(const Mask& m);
// first set bit at index >= from, or -1
int first_set(const Mask& m, int from = 0);
void and_into(Mask& dst, const Mask& src);
void andnot_into(Mask& dst, const Mask& src);
// keep only bits with index > i
void keep_above(Mask& m, int i);

}  // namespace bits

// Undirected simple graph with bitset adjacency rows.
class BitGraph {
 public:
  explicit BitGraph(int n);

  int size() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const Mask& row(int v) const { return rows_[v]; }
  int degree(int v) const;
  uint64_t edge_count() const;
  BitGraph complement() const;

 private:
  int n_ = 0;
  std::vector<Mask> rows_;
};

// Node budget shared across a search; exhaustion turns exact results into
// best-found lower bounds.
struct SearchBudget {
  uint64_t cap = 50000000;
  uint64_t used = 0;
  bool exhausted = false;

  bool tick() {
    if (exhausted || ++used > cap) exhausted = true;
    return !exhausted;
  }
};

// ---- exact max clique (greedy-coloring bound) ----

// Size of a maximum clique; best found so far if the budget exhausts.
int max_clique_size(const BitGraph& g, SearchBudget& budget);
// Is there a clique of size >= k inside 'allowed'?
bool exists_clique_in(const BitGraph& g, const Mask& allowed, int k, SearchBudget& budget);
// Lexicographically least clique of exactly size k (by vertex index).
// Empty result if none exists or the budget exhausts.
std::vector<int> lex_least_clique(const BitGraph& g, int k, SearchBudget& budget);

// ---- exact maximum subset with no clique of size 'forbid' ----
// forbid = 2 gives the maximum independent set. Bound: greedy clique
// cover, each cover clique contributing at most forbid-1 vertices.

int max_cliquefree_subset_size(const BitGraph& g, int forbid, SearchBudget& budget);
bool exists_cliquefree_subset(const BitGraph& g, int forbid, const std::vector<int>& chosen,
                              const Mask& allowed, int k, SearchBudget& budget);
std::vector<int> lex_least_cliquefree_subset(const BitGraph& g, int forbid, int k,
                                             SearchBudget& budget);

// ---- exact minimum set cover ----

struct CoverOutcome {
  enum class Status { found, exceeds_kmax, infeasible, budget };
  Status status = Status::infeasible;
  int size = 0;
  std::vector<int> witness;  // candidate indices, lexicographically least
};

// rows[j] is the bitmask of universe elements covered by candidate j; the
// universe has m elements. Finds a minimum cover of size <= kmax.
CoverOutcome min_set_cover(const std::vector<Mask>& rows, int m, int kmax,
                           SearchBudget& budget);

}  // namespace largeset

#endif
