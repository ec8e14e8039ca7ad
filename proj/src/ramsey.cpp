#include "largeset/ramsey.hpp"

#include <algorithm>

namespace largeset {

PairColoring PairColoring::make(std::vector<int64_t> vertices, int colors) {
  if (colors < 1) throw precondition_error("coloring needs at least one color");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw precondition_error("coloring vertex labels must be distinct");
  PairColoring c;
  c.vertices_ = std::move(vertices);
  c.colors_ = colors;
  size_t n = c.vertices_.size();
  c.assign_.assign(n * (n - 1) / 2, 0);
  return c;
}

PairColoring PairColoring::from_function(std::vector<int64_t> vertices, int colors,
                                         const std::function<int(int64_t, int64_t)>& fn) {
  PairColoring c = make(std::move(vertices), colors);
  size_t n = c.vertices_.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      c.set_color_at(static_cast<int>(i), static_cast<int>(j),
                     fn(c.vertices_[i], c.vertices_[j]));
  return c;
}

int PairColoring::index_of(int64_t label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) return -1;
  return static_cast<int>(it - vertices_.begin());
}

size_t PairColoring::slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  // pairs (i,j), i<j, laid out by j then i
  return static_cast<size_t>(j) * (static_cast<size_t>(j) - 1) / 2 + static_cast<size_t>(i);
}

int PairColoring::color_at(int i, int j) const {
  if (i == j) throw precondition_error("no color on a degenerate pair");
  return assign_[slot(i, j)];
}

void PairColoring::set_color_at(int i, int j, int color) {
  if (i == j) throw precondition_error("no color on a degenerate pair");
  if (color < 0 || color >= colors_) throw precondition_error("color index out of range");
  assign_[slot(i, j)] = static_cast<uint8_t>(color);
}

int PairColoring::color_of(int64_t u, int64_t v) const {
  int i = index_of(u), j = index_of(v);
  if (i < 0 || j < 0) throw precondition_error("label not in coloring vertex set");
  return color_at(i, j);
}

BitGraph PairColoring::color_class_graph(int color) const {
  int n = static_cast<int>(vertices_.size());
  BitGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (color_at(i, j) == color) g.add_edge(i, j);
  return g;
}

nlohmann::json PairColoring::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  j["colors"] = colors_;
  nlohmann::json pairs = nlohmann::json::array();
  size_t n = vertices_.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      pairs.push_back({vertices_[a], vertices_[b],
                       color_at(static_cast<int>(a), static_cast<int>(b))});
  j["pairs"] = pairs;
  return j;
}

PairColoring PairColoring::from_json(const nlohmann::json& j) {
  PairColoring c = make(j.at("vertices").get<std::vector<int64_t>>(),
                        j.at("colors").get<int>());
  size_t n = c.vertices_.size();
  std::vector<char> seen(n * (n - 1) / 2, 0);
  for (const auto& p : j.at("pairs")) {
    int64_t u = p.at(0).get<int64_t>(), v = p.at(1).get<int64_t>();
    int color = p.at(2).get<int>();
    int a = c.index_of(u), b = c.index_of(v);
    if (a < 0 || b < 0) throw precondition_error("pair references unknown vertex");
    c.set_color_at(a, b, color);
    seen[c.slot(a, b)] = 1;
  }
  for (char s : seen)
    if (!s) throw precondition_error("coloring is not total: missing pair");
  return c;
}

FilterBase FilterBase::of(std::vector<std::vector<int64_t>> sets) {
  for (auto& s : sets) {
    if (s.empty()) throw precondition_error("filter base element must be nonempty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  FilterBase b;
  b.sets = std::move(sets);
  return b;
}

HomogeneousResult find_homogeneous(const PairColoring& c, int s, uint64_t node_budget) {
  if (s < 2) throw precondition_error("find_homogeneous needs s >= 2");
  HomogeneousResult best;
  bool exhausted = false;
  for (int color = 0; color < c.colors(); ++color) {
    BitGraph g = c.color_class_graph(color);
    SearchBudget budget{node_budget};
    Mask all = bits::make_mask(g.size(), true);
    if (exists_clique_in(g, all, s, budget)) {
      SearchBudget b2{node_budget};
      std::vector<int> idx = lex_least_clique(g, s, b2);
      if (static_cast<int>(idx.size()) == s) {
        std::vector<int64_t> labels;
        for (int i : idx) labels.push_back(c.vertices()[static_cast<size_t>(i)]);
        if (best.status != HomogeneousResult::Status::found || labels < best.subset) {
          best.status = HomogeneousResult::Status::found;
          best.subset = labels;
          best.color = color;
        }
      } else {
        exhausted = true;
      }
    } else if (budget.exhausted) {
      exhausted = true;
    }
  }
  if (best.status != HomogeneousResult::Status::found && exhausted)
    best.status = HomogeneousResult::Status::undecided;
  return best;
}

namespace {

struct BadColoringSearch {
  int n, r, s;
  PairColoring coloring;
  std::vector<std::pair<int, int>> edges;  // vertex-major order
  SearchBudget& budget;

  BadColoringSearch(int n_, int r_, int s_, SearchBudget& b)
      : n(n_), r(r_), s(s_), budget(b) {
    std::vector<int64_t> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i);
    coloring = PairColoring::make(labels, r);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) edges.push_back({i, j});
  }

  // does assigning color c to edge (i,j) complete a monochromatic s-set?
  // all other member vertices are < i (later pairs are still uncolored)
  bool completes_homogeneous(int i, int j, int c) {
    std::vector<int> cand;
    for (int t = 0; t < i; ++t)
      if (coloring.color_at(t, i) == c && coloring.color_at(t, j) == c) cand.push_back(t);
    if (static_cast<int>(cand.size()) < s - 2) return false;
    // find an (s-2)-clique in color c among cand
    std::vector<int> stack;
    auto rec = [&](auto&& self, size_t from, int need) -> bool {
      if (need == 0) return true;
      for (size_t a = from; a < cand.size(); ++a) {
        bool ok = true;
        for (int u : stack)
          if (coloring.color_at(u, cand[a]) != c) {
            ok = false;
            break;
          }
        if (!ok) continue;
        stack.push_back(cand[a]);
        if (self(self, a + 1, need - 1)) return true;
        stack.pop_back();
      }
      return false;
    };
    return rec(rec, 0, s - 2);
  }

  // true when a coloring with no s-homogeneous set exists
  bool dfs(size_t e, int used_colors) {
    if (!budget.tick()) return false;
    if (e == edges.size()) return true;
    auto [i, j] = edges[e];
    int limit = std::min(used_colors + 1, r);
    for (int c = 0; c < limit; ++c) {
      if (completes_homogeneous(i, j, c)) continue;
      coloring.set_color_at(i, j, c);
      if (dfs(e + 1, std::max(used_colors, c + 1))) return true;
    }
    return false;
  }
};

}  // namespace

RamseyBoundResult ramsey_bound_search(int r, int s, int nmax, uint64_t node_budget) {
  if (r < 1 || s < 2) throw precondition_error("ramsey_bound_search needs r >= 1, s >= 2");
  RamseyBoundResult out;
  SearchBudget budget{node_budget};
  for (int n = s; n <= nmax; ++n) {
    BadColoringSearch search(n, r, s, budget);
    bool bad_found = search.dfs(0, 0);
    if (budget.exhausted) return out;  // undecided; best lower bound kept
    if (bad_found) {
      out.lower_bound = n;
      out.lower_bound_witness = search.coloring;
    } else {
      out.decided = true;
      out.value = n;
      return out;
    }
  }
  return out;  // no n <= nmax forces: undecided with lower bound = nmax
}

ArrowResult arrow_check(const FilterBase& base, const PairColoring& c, int lambda,
                        uint64_t node_budget) {
  ArrowResult out;
  // (a): a base element whose pairs are all colored 0
  for (const auto& A : base.sets) {
    bool all_zero = true;
    for (size_t i = 0; i < A.size() && all_zero; ++i)
      for (size_t j = i + 1; j < A.size(); ++j)
        if (c.color_of(A[i], A[j]) != 0) {
          all_zero = false;
          break;
        }
    if (all_zero) {
      out.kind = ArrowResult::Kind::base_zero_homogeneous;
      out.base_set = A;
      return out;
    }
  }
  // (b): a 1-homogeneous set of size >= lambda
  BitGraph ones = c.color_class_graph(1);
  SearchBudget budget{node_budget};
  Mask all = bits::make_mask(ones.size(), true);
  if (lambda >= 1 && exists_clique_in(ones, all, lambda, budget)) {
    SearchBudget b2{node_budget};
    std::vector<int> idx = lex_least_clique(ones, lambda, b2);
    if (static_cast<int>(idx.size()) == lambda) {
      out.kind = ArrowResult::Kind::big_one_homogeneous;
      for (int i : idx) out.one_set.push_back(c.vertices()[static_cast<size_t>(i)]);
      return out;
    }
  }
  // (c): neither; report the maximum 1-homogeneous set found
  SearchBudget b3{node_budget};
  int omega = max_clique_size(ones, b3);
  SearchBudget b4{node_budget};
  std::vector<int> idx = lex_least_clique(ones, omega, b4);
  out.kind = ArrowResult::Kind::base_insufficient;
  for (int i : idx) out.one_set.push_back(c.vertices()[static_cast<size_t>(i)]);
  return out;
}

RamseyFilterReport ramsey_filter_check(const FilterBase& base,
                                       const std::vector<PairColoring>& colorings) {
  RamseyFilterReport rep;
  for (size_t ci = 0; ci < colorings.size(); ++ci) {
    const PairColoring& c = colorings[ci];
    int found = -1, found_color = -1;
    for (size_t bi = 0; bi < base.sets.size() && found < 0; ++bi) {
      const auto& A = base.sets[bi];
      int color = -2;  // -2: unset, -1: mixed
      for (size_t i = 0; i < A.size() && color != -1; ++i) {
        for (size_t j = i + 1; j < A.size(); ++j) {
          int k = c.color_of(A[i], A[j]);
          if (color == -2) color = k;
          if (k != color) {
            color = -1;
            break;
          }
        }
      }
      if (color != -1) {
        found = static_cast<int>(bi);
        found_color = color == -2 ? 0 : color;  // singleton base set: trivially constant
      }
    }
    rep.base_index.push_back(found);
    rep.base_color.push_back(found_color);
    if (found < 0 && rep.consistent) {
      rep.consistent = false;
      rep.counterexample_coloring = static_cast<int>(ci);
    }
  }
  return rep;
}

LetterCliqueResult max_homogeneous_letter_set(const SetSpec& A,
                                              const std::vector<int64_t>& letters,
                                              uint64_t node_budget) {
  if (A.ctx.family != Family::boolean)
    throw family_error("max_homogeneous_letter_set needs a boolean-family set");
  std::vector<int64_t> ls = letters;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  int n = static_cast<int>(ls.size());
  BitGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (A.membership(Element::word({ls[static_cast<size_t>(i)], ls[static_cast<size_t>(j)]})))
        g.add_edge(i, j);
  SearchBudget budget{node_budget};
  int omega = max_clique_size(g, budget);
  LetterCliqueResult out;
  out.exact = !budget.exhausted;
  SearchBudget b2{node_budget};
  std::vector<int> idx = lex_least_clique(g, omega, b2);
  if (static_cast<int>(idx.size()) != omega) {
    // reconstruction starved: fall back to a deterministic greedy clique
    out.exact = false;
    idx.clear();
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int u : idx)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (ok) idx.push_back(v);
    }
  }
  for (int i : idx) out.letters.push_back(ls[static_cast<size_t>(i)]);
  return out;
}

}  // namespace largeset
