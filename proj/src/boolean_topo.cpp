#include "largeset/boolean_topo.hpp"

#include <algorithm>
#include <set>

namespace largeset {

WordSystem WordSystem::of(std::vector<Element> words) {
  for (const Element& w : words)
    if (w.family() != Family::boolean)
      throw family_error("WordSystem needs boolean words");
  WordSystem ws;
  ws.words_ = std::move(words);
  size_t k = ws.words_.size();
  ws.sums_.reserve(k * (k - 1) / 2);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) ws.sums_.push_back(op(ws.words_[i], ws.words_[j]));
  return ws;
}

const Element& WordSystem::pair_sum(size_t i, size_t j) const {
  if (i > j) std::swap(i, j);
  size_t k = words_.size();
  // index of (i,j), i<j, in row-major upper triangle
  size_t idx = i * k - i * (i + 1) / 2 + (j - i - 1);
  return sums_[idx];
}

nlohmann::json WordSystem::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Element& w : words_) arr.push_back(w.letters());
  return nlohmann::json{{"words", arr}};
}

WordSystem WordSystem::from_json(const nlohmann::json& j) {
  std::vector<Element> words;
  for (const auto& item : j.at("words"))
    words.push_back(Element::word(item.get<std::vector<int64_t>>()));
  return WordSystem::of(std::move(words));
}

namespace {

// window containment with the star letter admitted as an extra symbol
bool window_admits(const Window& w, const Element& g, bool include_star_words) {
  const auto* b = w.as_boolean();
  if (!b) throw family_error("neighborhood traces need a boolean window");
  bool has_star = false;
  for (int64_t l : g.letters()) {
    if (l == star_letter) {
      has_star = true;
      continue;
    }
    if (l < b->letter_lo || l > b->letter_hi) return false;
  }
  if (has_star && !include_star_words) return false;
  return g.letters().size() <= static_cast<size_t>(b->max_len);
}

}  // namespace

FiniteSet neighborhood_trace(const NeighborhoodSpec& spec, const Window& w,
                             bool include_star_words, uint64_t cap) {
  if (spec.letter_sets.empty()) throw precondition_error("neighborhood spec is empty");
  if (spec.depth < 0 || spec.depth > static_cast<int>(spec.letter_sets.size()))
    throw precondition_error("depth must be between 0 and the number of letter sets");
  std::set<Element> level = {Element::word({})};
  std::set<Element> trace = level;
  for (int k = 1; k <= spec.depth; ++k) {
    // U(V_k) = { x ^ y : x, y in A_k u {*} }
    std::vector<int64_t> pool = spec.letter_sets[static_cast<size_t>(k - 1)];
    pool.push_back(star_letter);
    std::vector<Element> layer_sums;
    layer_sums.push_back(Element::word({}));
    for (size_t a = 0; a < pool.size(); ++a)
      for (size_t b = a + 1; b < pool.size(); ++b)
        layer_sums.push_back(Element::word({pool[a], pool[b]}));
    std::set<Element> next;
    for (const Element& u : level) {
      for (const Element& s : layer_sums) {
        next.insert(op(u, s));
        if (next.size() > cap) throw resource_error("neighborhood trace exceeds cap");
      }
    }
    level = std::move(next);
    trace.insert(level.begin(), level.end());
    if (trace.size() > cap) throw resource_error("neighborhood trace exceeds cap");
  }
  std::vector<Element> kept;
  for (const Element& g : trace)
    if (window_admits(w, g, include_star_words)) kept.push_back(g);
  return FiniteSet::of(std::move(kept));
}

FiniteSet even_sphere_trace(const std::vector<int64_t>& letters, int n) {
  if (n < 0) throw precondition_error("even_sphere_trace needs n >= 0");
  std::vector<int64_t> pool = letters;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<Element> out;
  std::vector<int64_t> cur;
  size_t want = 2 * static_cast<size_t>(n);
  auto rec = [&](auto&& self, size_t from) -> void {
    if (cur.size() == want) {
      out.push_back(Element::word(cur));
      return;
    }
    for (size_t i = from; i + (want - cur.size()) <= pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return FiniteSet::of(std::move(out));
}

namespace {

// try to represent w_i = t ^ {x_1-candidate}; returns the letters or
// nothing if the hypothesis fails
std::optional<std::vector<int64_t>> extend_hypothesis(const WordSystem& ws, int64_t x1) {
  size_t k = ws.size();
  Element t = op(ws.word(0), Element::word({x1}));
  std::vector<int64_t> xs = {x1};
  for (size_t i = 1; i < k; ++i) {
    Element rem = op(ws.word(i), t);
    if (rem.letters().size() != 1) return std::nullopt;
    xs.push_back(rem.letters()[0]);
  }
  // verify every pair
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      if (xs[i] == xs[j]) return std::nullopt;
      if (!(ws.pair_sum(i, j) == Element::word({xs[i], xs[j]}))) return std::nullopt;
    }
  return xs;
}

}  // namespace

TwoWordsResult two_words_decompose(const WordSystem& ws) {
  size_t k = ws.size();
  if (k == 0) throw precondition_error("two_words_decompose needs at least one word");
  TwoWordsResult out;
  if (k == 1) {
    out.kind = TwoWordsResult::Kind::letters;
    const auto& ls = ws.word(0).letters();
    out.letters = {ls.empty() ? 0 : ls[0]};  // any letter represents a lone word
    return out;
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      if (ws.pair_sum(i, j).letters().size() != 2) {
        out.kind = TwoWordsResult::Kind::not_applicable;
        out.offending_pair = {static_cast<int>(i), static_cast<int>(j)};
        return out;
      }
    }
  }
  if (k == 4) {
    Element quad = op(op(ws.word(0), ws.word(1)), op(ws.word(2), ws.word(3)));
    if (quad.is_identity()) {
      // w_4 = w_1 ^ w_2 ^ w_3 up to index order: the exceptional case.
      // Letters come from the first three words; all six pairwise sums
      // stay available via pair_sum for recomputation.
      WordSystem three = WordSystem::of({ws.word(0), ws.word(1), ws.word(2)});
      TwoWordsResult sub = two_words_decompose(three);
      if (sub.kind != TwoWordsResult::Kind::letters)
        throw error("exceptional system failed to decompose its first three words");
      out.kind = TwoWordsResult::Kind::exceptional_k4;
      out.letters = sub.letters;
      return out;
    }
  }
  const auto& first = ws.pair_sum(0, 1).letters();
  for (int64_t x1 : {first[0], first[1]}) {
    if (auto xs = extend_hypothesis(ws, x1)) {
      out.kind = TwoWordsResult::Kind::letters;
      out.letters = std::move(*xs);
      return out;
    }
  }
  throw error("two-letter sums admit no representation; input is inconsistent");
}

SetSpec c_set_from_coloring(const PairColoring& c) {
  SetSpec out;
  out.name = "c_set_complement";
  out.ctx = GroupCtx::booleans();
  int64_t lo = c.vertices().empty() ? 0 : c.vertices().front();
  int64_t hi = c.vertices().empty() ? 0 : c.vertices().back();
  out.window = Window::boolean_ball(2, std::min<int64_t>(lo, 0), std::max<int64_t>(hi, 0));
  out.provenance = "complement of the 1-colored two-letter words of a pair coloring";
  out.membership = [c](const Element& g) {
    const auto& ls = g.letters();
    if (ls.size() != 2) return true;
    if (c.index_of(ls[0]) < 0 || c.index_of(ls[1]) < 0) return true;
    return c.color_of(ls[0], ls[1]) != 1;
  };
  return out;
}

namespace {

std::pair<std::array<int64_t, 2>, std::array<int, 2>> survivors(const Element& w,
                                                                const Element& sum) {
  std::array<int64_t, 2> letters{};
  std::array<int, 2> positions{};
  int found = 0;
  const auto& wl = w.letters();
  for (size_t p = 0; p < wl.size(); ++p) {
    if (std::binary_search(sum.letters().begin(), sum.letters().end(), wl[p])) {
      letters[static_cast<size_t>(found)] = wl[p];
      positions[static_cast<size_t>(found)] = static_cast<int>(p) + 1;
      ++found;
    }
  }
  if (found != 2) throw error("unreachable: 4-letter words with 4-letter sum share 2 letters");
  return {letters, positions};
}

void require_b4_pair(const Element& wi, const Element& wj) {
  if (wi.family() != Family::boolean || wj.family() != Family::boolean)
    throw family_error("b4 colorings need boolean words");
  if (wi.letters().size() != 4 || wj.letters().size() != 4)
    throw precondition_error("b4 colorings need words of length exactly 4");
  if (op(wi, wj).letters().size() != 4)
    throw precondition_error("b4 colorings need a 4-letter pairwise sum");
}

}  // namespace

B4Quadruple b4_quadruple_coloring(const Element& wi, const Element& wj) {
  require_b4_pair(wi, wj);
  Element sum = op(wi, wj);
  auto [li, pi] = survivors(wi, sum);
  auto [lj, pj] = survivors(wj, sum);
  (void)li;
  (void)lj;
  return B4Quadruple{pi[0], pi[1], pj[0], pj[1]};
}

int b4_arrangement_coloring(const Element& wi, const Element& wj) {
  require_b4_pair(wi, wj);
  Element sum = op(wi, wj);
  auto [li, pi] = survivors(wi, sum);
  (void)pi;
  const auto& sl = sum.letters();
  int pos1 = 0, pos2 = 0;
  for (size_t p = 0; p < sl.size(); ++p) {
    if (sl[p] == li[0]) pos1 = static_cast<int>(p) + 1;
    if (sl[p] == li[1]) pos2 = static_cast<int>(p) + 1;
  }
  return pos1 * 10 + pos2;
}

SetSpec c4_set_from_coloring(const PairColoring& c) {
  SetSpec out;
  out.name = "c4_set";
  out.ctx = GroupCtx::booleans();
  int64_t lo = c.vertices().empty() ? 0 : c.vertices().front();
  int64_t hi = c.vertices().empty() ? 0 : c.vertices().back();
  out.window = Window::boolean_ball(4, std::min<int64_t>(lo, 0), std::max<int64_t>(hi, 0));
  out.provenance = "4-letter words whose three pair splittings disagree under a coloring";
  out.membership = [c](const Element& g) {
    const auto& a = g.letters();
    if (a.size() != 4) return false;
    for (int64_t l : a)
      if (c.index_of(l) < 0) return false;
    return c.color_of(a[0], a[1]) != c.color_of(a[2], a[3]) &&
           c.color_of(a[0], a[2]) != c.color_of(a[1], a[3]) &&
           c.color_of(a[0], a[3]) != c.color_of(a[1], a[2]);
  };
  return out;
}

nlohmann::json TraceContainment::to_json() const {
  nlohmann::json j;
  j["contained"] = contained;
  j["base_index"] = base_index;
  j["zero_missing"] = zero_missing;
  if (uncovered) j["uncovered"] = uncovered->str();
  j["per_base"] = per_base;
  return j;
}

TraceContainment trace_containment_check(const SetSpec& fat_set, const FilterBase& base,
                                         int n, const Window& w) {
  if (fat_set.ctx.family != Family::boolean)
    throw family_error("trace_containment_check needs a boolean-family set");
  TraceContainment out;
  Element zero = Element::word({});
  for (size_t bi = 0; bi < base.sets.size(); ++bi) {
    const auto& A = base.sets[bi];
    nlohmann::json rec;
    rec["base_index"] = bi;
    bool ok = true;
    std::optional<Element> first_uncovered;
    if (!fat_set.membership(zero)) {
      ok = false;
      out.zero_missing = true;
      first_uncovered = zero;
    }
    int truncated = 0;
    for (int m = 1; m <= n && ok; ++m) {
      for (const Element& word : even_sphere_trace(A, m)) {
        if (!w.contains(word)) {
          ++truncated;
          continue;
        }
        if (!fat_set.membership(word)) {
          ok = false;
          first_uncovered = word;
          break;
        }
      }
    }
    rec["contained"] = ok;
    rec["trace_words_outside_window"] = truncated;
    if (first_uncovered) rec["uncovered"] = first_uncovered->str();
    out.per_base.push_back(rec);
    if (ok) {
      out.contained = true;
      out.base_index = static_cast<int>(bi);
      return out;
    }
    if (bi == 0) out.uncovered = first_uncovered;
  }
  return out;
}

}  // namespace largeset
