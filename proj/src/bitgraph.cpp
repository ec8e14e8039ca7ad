#include "largeset/bitgraph.hpp"

#include <algorithm>
#include <bit>

#include "largeset/errors.hpp"

namespace largeset {

namespace bits {

Mask make_mask(int n, bool full) {
  Mask m(static_cast<size_t>((n + 63) / 64), 0);
  if (full) {
    for (auto& w : m) w = ~0ULL;
    if (n % 64) m.back() = (1ULL << (n % 64)) - 1;
  }
  return m;
}

bool test(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1; }
void set(Mask& m, int i) { m[i >> 6] |= 1ULL << (i & 63); }
void reset(Mask& m, int i) { m[i >> 6] &= ~(1ULL << (i & 63)); }

int popcount(const Mask& m) {
  int c = 0;
  for (uint64_t w : m) c += std::popcount(w);
  return c;
}

bool empty(const Mask& m) {
  for (uint64_t w : m)
    if (w) return false;
  return true;
}

int first_set(const Mask& m, int from) {
  size_t wi = static_cast<size_t>(from >> 6);
  if (wi >= m.size()) return -1;
  uint64_t w = m[wi] & (~0ULL << (from & 63));
  while (true) {
    if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
    if (++wi >= m.size()) return -1;
    w = m[wi];
  }
}

void and_into(Mask& dst, const Mask& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(Mask& dst, const Mask& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

void keep_above(Mask& m, int i) {
  size_t wi = static_cast<size_t>((i + 1) >> 6);
  for (size_t k = 0; k < wi && k < m.size(); ++k) m[k] = 0;
  if (wi < m.size() && ((i + 1) & 63)) m[wi] &= ~0ULL << ((i + 1) & 63);
}

}  // namespace bits

BitGraph::BitGraph(int n) : n_(n) {
  rows_.assign(static_cast<size_t>(n), bits::make_mask(n, false));
}

void BitGraph::add_edge(int u, int v) {
  if (u == v) throw precondition_error("BitGraph loop edge");
  bits::set(rows_[u], v);
  bits::set(rows_[v], u);
}

bool BitGraph::has_edge(int u, int v) const { return bits::test(rows_[u], v); }

int BitGraph::degree(int v) const { return bits::popcount(rows_[v]); }

uint64_t BitGraph::edge_count() const {
  uint64_t total = 0;
  for (int v = 0; v < n_; ++v) total += static_cast<uint64_t>(degree(v));
  return total / 2;
}

BitGraph BitGraph::complement() const {
  BitGraph c(n_);
  for (int v = 0; v < n_; ++v) {
    c.rows_[v] = bits::make_mask(n_, true);
    bits::andnot_into(c.rows_[v], rows_[v]);
    bits::reset(c.rows_[v], v);
  }
  return c;
}

namespace {

// Greedy coloring of the vertices in P; fills `order` with the vertices
// sorted by color (ascending) and `color` with their 1-based color. The
// color count bounds the clique size in P.
void greedy_color(const BitGraph& g, const Mask& P, std::vector<int>& order,
                  std::vector<int>& color) {
  order.clear();
  color.clear();
  Mask uncolored = P;
  int c = 0;
  while (!bits::empty(uncolored)) {
    ++c;
    Mask cls = uncolored;
    int v = bits::first_set(cls);
    while (v >= 0) {
      order.push_back(v);
      color.push_back(c);
      bits::reset(uncolored, v);
      bits::reset(cls, v);
      bits::andnot_into(cls, g.row(v));  // class stays independent
      v = bits::first_set(cls, v + 1);
    }
  }
}

struct CliqueSearch {
  const BitGraph& g;
  SearchBudget& budget;
  int best = 0;
  int target;  // stop as soon as best >= target (set huge for max search)

  CliqueSearch(const BitGraph& gg, SearchBudget& b, int tgt) : g(gg), budget(b), target(tgt) {}

  void expand(Mask& P, int depth) {
    if (best >= target || budget.exhausted) return;
    std::vector<int> order, color;
    greedy_color(g, P, order, color);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (!budget.tick()) return;
      if (depth + color[idx] <= best) return;  // colors only shrink leftwards
      int v = order[idx];
      Mask P2 = P;
      bits::and_into(P2, g.row(v));
      if (bits::empty(P2)) {
        best = std::max(best, depth + 1);
        if (best >= target) return;
      } else {
        expand(P2, depth + 1);
        if (best >= target || budget.exhausted) return;
      }
      bits::reset(P, v);
    }
  }
};

}  // namespace

int max_clique_size(const BitGraph& g, SearchBudget& budget) {
  if (g.size() == 0) return 0;
  CliqueSearch s(g, budget, g.size() + 1);
  Mask all = bits::make_mask(g.size(), true);
  s.expand(all, 0);
  return s.best;
}

bool exists_clique_in(const BitGraph& g, const Mask& allowed, int k, SearchBudget& budget) {
  if (k <= 0) return true;
  if (bits::popcount(allowed) < k) return false;
  CliqueSearch s(g, budget, k);
  Mask P = allowed;
  s.expand(P, 0);
  return s.best >= k;
}

std::vector<int> lex_least_clique(const BitGraph& g, int k, SearchBudget& budget) {
  Mask allowed = bits::make_mask(g.size(), true);
  if (!exists_clique_in(g, allowed, k, budget)) return {};
  std::vector<int> chosen;
  for (int step = 0; step < k; ++step) {
    int need = k - static_cast<int>(chosen.size()) - 1;
    int v = bits::first_set(allowed);
    bool advanced = false;
    while (v >= 0) {
      Mask next = allowed;
      bits::and_into(next, g.row(v));
      bits::keep_above(next, v);
      if (need == 0 || exists_clique_in(g, next, need, budget)) {
        chosen.push_back(v);
        allowed = next;
        advanced = true;
        break;
      }
      v = bits::first_set(allowed, v + 1);
    }
    if (!advanced) return {};  // budget exhausted mid-reconstruction
  }
  return chosen;
}

namespace {

// Does the induced subgraph on `verts` contain a clique of size k?
// Used only on tiny vertex lists (subsets of the current chosen set).
bool small_clique_among(const BitGraph& g, const std::vector<int>& verts, size_t from, int k,
                        std::vector<int>& stack) {
  if (k == 0) return true;
  for (size_t i = from; i < verts.size(); ++i) {
    int v = verts[i];
    bool ok = true;
    for (int u : stack)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    stack.push_back(v);
    if (small_clique_among(g, verts, i + 1, k - 1, stack)) {
      stack.pop_back();
      return true;
    }
    stack.pop_back();
  }
  return false;
}

// Would adding v to chosen create a clique of size `forbid`?
bool creates_forbidden(const BitGraph& g, int forbid, const std::vector<int>& chosen, int v) {
  std::vector<int> nbrs;
  for (int u : chosen)
    if (g.has_edge(u, v)) nbrs.push_back(u);
  if (static_cast<int>(nbrs.size()) < forbid - 1) return false;
  std::vector<int> stack;
  return small_clique_among(g, nbrs, 0, forbid - 1, stack);
}

// Largest clique size among `verts`, capped at `cap`.
int max_small_clique(const BitGraph& g, const std::vector<int>& verts, int cap) {
  std::vector<int> stack;
  for (int k = std::min<int>(cap, static_cast<int>(verts.size())); k >= 1; --k)
    if (small_clique_among(g, verts, 0, k, stack)) return k;
  return 0;
}

// Sum over a greedy clique cover of P of the residual capacity of each
// cover clique: a forbid-clique-free superset of `chosen` can take at most
// forbid-1-t vertices of a clique C when t chosen vertices form a clique
// inside the common neighborhood of C.
int clique_cover_bound(const BitGraph& g, const Mask& P, int forbid,
                       const std::vector<int>& chosen) {
  Mask rest = P;
  int bound = 0;
  std::vector<int> members;
  while (!bits::empty(rest)) {
    int v = bits::first_set(rest);
    Mask common = rest;
    members.clear();
    while (v >= 0) {
      members.push_back(v);
      bits::reset(rest, v);
      bits::reset(common, v);
      bits::and_into(common, g.row(v));  // clique: next must neighbor all
      v = bits::first_set(common);
    }
    int cap = std::min(static_cast<int>(members.size()), forbid - 1);
    if (!chosen.empty() && forbid > 2) {
      std::vector<int> inside;
      for (int u : chosen) {
        bool adj_all = true;
        for (int m : members)
          if (!g.has_edge(u, m)) {
            adj_all = false;
            break;
          }
        if (adj_all) inside.push_back(u);
      }
      if (!inside.empty())
        cap = std::min(cap, forbid - 1 - max_small_clique(g, inside, forbid - 1));
    }
    bound += std::max(cap, 0);
  }
  return bound;
}

struct CliquefreeSearch {
  const BitGraph& g;
  SearchBudget& budget;
  int forbid;
  int best = 0;
  int target;
  std::vector<int> chosen;

  CliquefreeSearch(const BitGraph& gg, SearchBudget& b, int f, int tgt)
      : g(gg), budget(b), forbid(f), target(tgt) {}

  void expand(const Mask& P) {
    if (best >= target || budget.exhausted) return;
    int have = static_cast<int>(chosen.size());
    best = std::max(best, have);
    if (best >= target) return;
    if (!budget.tick()) return;
    int bound = clique_cover_bound(g, P, forbid, chosen);
    if (have + bound <= best) return;
    int v = bits::first_set(P);
    if (v < 0) return;
    // include v
    Mask inc = P;
    bits::reset(inc, v);
    chosen.push_back(v);
    int u = bits::first_set(inc);
    while (u >= 0) {
      if (creates_forbidden(g, forbid, chosen, u)) bits::reset(inc, u);
      u = bits::first_set(inc, u + 1);
    }
    expand(inc);
    chosen.pop_back();
    if (best >= target || budget.exhausted) return;
    // exclude v
    Mask exc = P;
    bits::reset(exc, v);
    expand(exc);
  }
};

}  // namespace

int max_cliquefree_subset_size(const BitGraph& g, int forbid, SearchBudget& budget) {
  if (forbid < 2) throw precondition_error("forbidden clique size must be >= 2");
  CliquefreeSearch s(g, budget, forbid, g.size() + 1);
  Mask all = bits::make_mask(g.size(), true);
  s.expand(all);
  return s.best;
}

bool exists_cliquefree_subset(const BitGraph& g, int forbid, const std::vector<int>& chosen,
                              const Mask& allowed, int k, SearchBudget& budget) {
  if (k <= 0) return true;
  CliquefreeSearch s(g, budget, forbid, static_cast<int>(chosen.size()) + k);
  s.chosen = chosen;
  Mask P = allowed;
  // drop candidates conflicting with the forced prefix
  int u = bits::first_set(P);
  while (u >= 0) {
    if (creates_forbidden(g, forbid, s.chosen, u)) bits::reset(P, u);
    u = bits::first_set(P, u + 1);
  }
  s.best = static_cast<int>(chosen.size());
  s.expand(P);
  return s.best >= static_cast<int>(chosen.size()) + k;
}

std::vector<int> lex_least_cliquefree_subset(const BitGraph& g, int forbid, int k,
                                             SearchBudget& budget) {
  Mask allowed = bits::make_mask(g.size(), true);
  if (!exists_cliquefree_subset(g, forbid, {}, allowed, k, budget)) return {};
  std::vector<int> chosen;
  while (static_cast<int>(chosen.size()) < k) {
    int need = k - static_cast<int>(chosen.size()) - 1;
    int v = bits::first_set(allowed);
    bool advanced = false;
    while (v >= 0) {
      if (!creates_forbidden(g, forbid, chosen, v)) {
        Mask next = allowed;
        bits::keep_above(next, v);
        chosen.push_back(v);
        if (need == 0 || exists_cliquefree_subset(g, forbid, chosen, next, need, budget)) {
          allowed = next;
          advanced = true;
          break;
        }
        chosen.pop_back();
      }
      v = bits::first_set(allowed, v + 1);
    }
    if (!advanced) return {};
  }
  return chosen;
}

namespace {

// Does a cover of `uncovered` of size <= t exist using candidates from
// `allowed`? Branches on the uncovered element with fewest covers.
bool exists_cover(const std::vector<Mask>& rows, const Mask& uncovered, const Mask& allowed,
                  int t, SearchBudget& budget) {
  if (bits::empty(uncovered)) return true;
  if (t == 0) return false;
  if (!budget.tick()) return false;
  int m_bits = static_cast<int>(uncovered.size() * 64);
  // find the uncovered element covered by fewest allowed candidates
  int pick = -1, pick_count = INT32_MAX;
  int max_cover = 0;
  std::vector<int> allowed_list;
  for (int j = bits::first_set(allowed); j >= 0; j = bits::first_set(allowed, j + 1))
    allowed_list.push_back(j);
  for (int e = bits::first_set(uncovered); e >= 0 && e < m_bits;
       e = bits::first_set(uncovered, e + 1)) {
    int cnt = 0;
    for (int j : allowed_list)
      if (bits::test(rows[static_cast<size_t>(j)], e)) ++cnt;
    if (cnt == 0) return false;  // nobody covers e
    if (cnt < pick_count) {
      pick_count = cnt;
      pick = e;
    }
  }
  for (int j : allowed_list) {
    Mask covered = uncovered;
    bits::and_into(covered, rows[static_cast<size_t>(j)]);
    max_cover = std::max(max_cover, bits::popcount(covered));
  }
  if (max_cover == 0) return false;
  if ((bits::popcount(uncovered) + max_cover - 1) / max_cover > t) return false;
  for (int j : allowed_list) {
    if (!bits::test(rows[static_cast<size_t>(j)], pick)) continue;
    Mask rest = uncovered;
    bits::andnot_into(rest, rows[static_cast<size_t>(j)]);
    Mask allowed2 = allowed;
    bits::reset(allowed2, j);
    if (exists_cover(rows, rest, allowed2, t - 1, budget)) return true;
    if (budget.exhausted) return false;
  }
  return false;
}

}  // namespace

CoverOutcome min_set_cover(const std::vector<Mask>& rows, int m, int kmax,
                           SearchBudget& budget) {
  CoverOutcome out;
  if (m == 0) {
    out.status = CoverOutcome::Status::found;
    out.size = 0;
    return out;
  }
  Mask universe = bits::make_mask(m, true);
  Mask all_union = bits::make_mask(m, false);
  for (const Mask& r : rows)
    for (size_t i = 0; i < all_union.size() && i < r.size(); ++i) all_union[i] |= r[i];
  {
    Mask probe = universe;
    bits::andnot_into(probe, all_union);
    if (!bits::empty(probe)) {
      out.status = CoverOutcome::Status::infeasible;
      return out;
    }
  }
  Mask allowed = bits::make_mask(static_cast<int>(rows.size()), true);
  int found_k = -1;
  for (int k = 1; k <= kmax; ++k) {
    if (exists_cover(rows, universe, allowed, k, budget)) {
      found_k = k;
      break;
    }
    if (budget.exhausted) {
      out.status = CoverOutcome::Status::budget;
      return out;
    }
  }
  if (found_k < 0) {
    out.status = CoverOutcome::Status::exceeds_kmax;
    return out;
  }
  // lexicographically least witness of the minimum size
  std::vector<int> chosen;
  Mask uncovered = universe;
  Mask pool = allowed;
  while (static_cast<int>(chosen.size()) < found_k && !bits::empty(uncovered)) {
    int need = found_k - static_cast<int>(chosen.size()) - 1;
    bool advanced = false;
    for (int j = bits::first_set(pool); j >= 0; j = bits::first_set(pool, j + 1)) {
      Mask rest = uncovered;
      bits::andnot_into(rest, rows[static_cast<size_t>(j)]);
      Mask pool2 = pool;
      bits::keep_above(pool2, j);
      if (exists_cover(rows, rest, pool2, need, budget)) {
        chosen.push_back(j);
        uncovered = rest;
        pool = pool2;
        advanced = true;
        break;
      }
      if (budget.exhausted) {
        out.status = CoverOutcome::Status::budget;
        return out;
      }
    }
    if (!advanced) {
      out.status = CoverOutcome::Status::budget;
      return out;
    }
  }
  out.status = CoverOutcome::Status::found;
  out.size = found_k;
  out.witness = std::move(chosen);
  return out;
}

}  // namespace largeset
