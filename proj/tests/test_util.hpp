#ifndef LARGESET_TEST_UTIL_HPP
#define LARGESET_TEST_UTIL_HPP

#include <bit>
#include <vector>

#include "largeset/bitgraph.hpp"
#include "largeset/element.hpp"
#include "largeset/finite_set.hpp"
#include "largeset/rng.hpp"

namespace testutil {

inline largeset::Element I(int64_t n) { return largeset::Element::integer(n); }

inline largeset::Element W(std::vector<int64_t> letters) {
  return largeset::Element::word(std::move(letters));
}

inline largeset::Element FW(std::vector<int32_t> gens) {
  return largeset::Element::free_word(std::move(gens));
}

inline largeset::FiniteSet FS(std::vector<largeset::Element> elems) {
  return largeset::FiniteSet::of(std::move(elems));
}

// Independent-set brute force: plain recursion without bounds, usable up
// to ~20 vertices. Deliberately unrelated to the branch-and-bound path.
inline int brute_alpha(const largeset::BitGraph& g) {
  int n = g.size();
  int best = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : chosen)
        if (g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// Max clique brute force via subset DP; n <= 20.
inline int brute_max_clique(const largeset::BitGraph& g) {
  int n = g.size();
  std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) adj[static_cast<size_t>(u)] |= 1u << v;
  size_t total = size_t{1} << n;
  std::vector<char> is_clique(total, 0);
  is_clique[0] = 1;
  int best = 0;
  for (size_t m = 1; m < total; ++m) {
    int v = std::countr_zero(m);
    size_t rest = m & (m - 1);
    if (is_clique[rest] && (rest & ~static_cast<size_t>(adj[static_cast<size_t>(v)])) == 0) {
      is_clique[m] = 1;
      best = std::max(best, std::popcount(m));
    }
  }
  return best;
}

// Largest subset with no clique of size `forbid`, brute force, n <= ~16.
inline int brute_max_cliquefree(const largeset::BitGraph& g, int forbid) {
  int n = g.size();
  std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) adj[static_cast<size_t>(u)] |= 1u << v;
  auto has_clique = [&](uint32_t mask, int k) {
    auto rec = [&](auto&& self, uint32_t cand, int need) -> bool {
      if (need == 0) return true;
      while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (self(self, cand & adj[static_cast<size_t>(v)], need - 1)) return true;
      }
      return false;
    };
    return rec(rec, mask, k);
  };
  int best = 0;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) <= best) continue;
    if (!has_clique(m, forbid)) best = std::popcount(m);
  }
  return best;
}

inline largeset::BitGraph random_graph(int n, double density_pct, largeset::SplitMix64& rng) {
  largeset::BitGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < static_cast<uint64_t>(density_pct)) g.add_edge(u, v);
  return g;
}

}  // namespace testutil

#endif
