#include "largeset/largeness.hpp"

#include <algorithm>
#include <functional>

namespace largeset {

namespace {

void add_validation_note(const SetSpec& A, const Window& w, LargenessReport& r);

LargenessReport base_report(const char* predicate, const SetSpec& A, const Window& w) {
  LargenessReport r;
  r.predicate = predicate;
  r.set_name = A.name;
  r.window = w;
  add_validation_note(A, w, r);
  return r;
}

void add_validation_note(const SetSpec& A, const Window& w, LargenessReport& r) {
  if (!A.validated_letter_range) return;
  auto [vlo, vhi] = *A.validated_letter_range;
  int64_t lo, hi;
  if (const auto* ir = w.as_int()) {
    lo = ir->lo;
    hi = ir->hi;
  } else if (const auto* bb = w.as_boolean()) {
    lo = bb->letter_lo;
    hi = bb->letter_hi;
  } else {
    return;
  }
  if (lo < vlo || hi > vhi)
    r.notes.push_back("unvalidated: window letters [" + std::to_string(lo) + "," +
                      std::to_string(hi) + "] exceed the validated range [" +
                      std::to_string(vlo) + "," + std::to_string(vhi) + "]");
}

FiniteSet pick(const std::vector<Element>& verts, const std::vector<int>& idx) {
  std::vector<Element> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(verts[static_cast<size_t>(i)]);
  return FiniteSet::of(std::move(out));
}

FiniteSet prefix_set(const std::vector<Element>& verts, int k) {
  std::vector<Element> out(verts.begin(), verts.begin() + k);
  return FiniteSet::of(std::move(out));
}

}  // namespace

ProbeFamily default_probe_family(const GroupCtx& ctx, const Window& w, int int_interval_max) {
  ProbeFamily fam;
  switch (ctx.family) {
    case Family::integer: {
      for (int j = 1; j <= int_interval_max; ++j) {
        std::vector<Element> probe;
        for (int i = 0; i < j; ++i) probe.push_back(Element::integer(i));
        fam.probes.push_back(FiniteSet::of(std::move(probe)));
      }
      fam.description =
          "integer intervals {0..j-1}, j <= " + std::to_string(int_interval_max);
      break;
    }
    case Family::boolean: {
      const auto* b = w.as_boolean();
      int64_t width = std::min<int64_t>(3, b->letter_hi - b->letter_lo + 1);
      for (int radius = 1; radius <= 2; ++radius) {
        Window ball = Window::boolean_ball(radius, b->letter_lo, b->letter_lo + width - 1);
        fam.probes.push_back(FiniteSet::of(enumerate_window(ctx, ball)));
      }
      fam.description = "boolean balls of radius 1 and 2 over the first " +
                        std::to_string(width) + " window letters";
      break;
    }
    case Family::free_group: {
      for (int radius = 1; radius <= 2; ++radius)
        fam.probes.push_back(FiniteSet::of(enumerate_window(ctx, Window::free_ball(radius))));
      fam.description = "free balls of radius 1 and 2";
      break;
    }
  }
  return fam;
}

std::optional<Element> is_thick_on(const SetSpec& A, const FiniteSet& F, const Window& w,
                                   const SolveOptions& opt) {
  if (F.empty()) return Element::identity(A.ctx);
  if (F[0].family() != A.ctx.family)
    throw family_error("is_thick_on: F family does not match set family");
  for (const Element& g : enumerate_window(A.ctx, w, opt.cap())) {
    bool all = true;
    for (const Element& f : F) {
      if (!A.membership(op(f, g))) {
        all = false;
        break;
      }
    }
    if (all) return g;
  }
  return std::nullopt;
}

namespace {

struct ThickOutcome {
  bool thick = true;
  bool budget_out = false;
  std::optional<FiniteSet> failing_probe;
  std::optional<Element> last_witness;
  nlohmann::json per_probe = nlohmann::json::array();
};

ThickOutcome run_thick_check(const SetSpec& A, const std::vector<Element>& window_elems,
                             const ProbeFamily& probes, SearchBudget& budget) {
  ThickOutcome out;
  for (const FiniteSet& probe : probes.probes) {
    std::optional<Element> witness;
    for (const Element& g : window_elems) {
      if (!budget.tick()) {
        out.budget_out = true;
        return out;
      }
      bool all = true;
      for (const Element& f : probe) {
        if (!A.membership(op(f, g))) {
          all = false;
          break;
        }
      }
      if (all) {
        witness = g;
        break;
      }
    }
    nlohmann::json rec;
    rec["probe"] = probe.str();
    rec["witness"] = witness ? witness->str() : "none";
    out.per_probe.push_back(rec);
    if (!witness) {
      out.thick = false;
      out.failing_probe = probe;
      return out;
    }
    out.last_witness = witness;
  }
  return out;
}

}  // namespace

LargenessReport thick_on_window(const SetSpec& A, const Window& w, const ProbeFamily& probes,
                                const SolveOptions& opt) {
  LargenessReport r = base_report("thick_on_window", A, w);
  auto elems = enumerate_window(A.ctx, w, opt.cap());
  SearchBudget budget{opt.node_budget};
  ThickOutcome out = run_thick_check(A, elems, probes, budget);
  r.notes.push_back("relative to probe family (" + probes.description +
                    "), an under-approximation of all finite F");
  r.extra["probes"] = out.per_probe;
  if (out.budget_out) {
    r.decided = false;
    r.notes.push_back("search budget exhausted");
    return r;
  }
  r.holds = out.thick;
  if (out.thick) {
    if (out.last_witness) r.witness_element = out.last_witness;
  } else {
    r.counterexample = out.failing_probe;
  }
  return r;
}

LargenessReport syndeticity_index(const SetSpec& A, const Window& w, int pad, int kmax,
                                  const SolveOptions& opt) {
  LargenessReport r = base_report("syndeticity_index", A, w);
  r.extra["pad"] = pad;
  r.extra["kmax"] = kmax;
  Window inner = w.padded(pad);
  auto inner_elems = enumerate_window(A.ctx, inner, opt.cap());
  auto candidates = enumerate_window(A.ctx, w, opt.cap());
  int m = static_cast<int>(inner_elems.size());
  std::vector<Mask> rows;
  rows.reserve(candidates.size());
  for (const Element& f : candidates) {
    Mask row = bits::make_mask(m, false);
    Element fi = inverse(f);
    for (int i = 0; i < m; ++i)
      if (A.membership(op(fi, inner_elems[static_cast<size_t>(i)]))) bits::set(row, i);
    rows.push_back(std::move(row));
  }
  SearchBudget budget{opt.node_budget};
  CoverOutcome res = min_set_cover(rows, m, kmax, budget);
  switch (res.status) {
    case CoverOutcome::Status::found:
      r.value = res.size;
      r.holds = true;
      r.witness = pick(candidates, res.witness);
      r.exactness = Exactness::exact_on_window;
      break;
    case CoverOutcome::Status::exceeds_kmax:
      r.decided = false;
      r.exactness = Exactness::lower_bound;
      r.value = kmax + 1;
      r.notes.push_back("no cover of size <= kmax exists; index on window exceeds kmax");
      break;
    case CoverOutcome::Status::infeasible:
      r.decided = false;
      r.notes.push_back("window candidates cannot cover the inner window at any size");
      break;
    case CoverOutcome::Status::budget:
      r.decided = false;
      r.notes.push_back("search budget exhausted");
      break;
  }
  return r;
}

LargenessReport thickness_index(const SetSpec& A, const Window& w, int kmax,
                                const ProbeFamily& probes, const SolveOptions& opt) {
  LargenessReport r = base_report("thickness_index", A, w);
  r.extra["kmax"] = kmax;
  r.notes.push_back("thickness relative to probe family (" + probes.description + ")");
  auto candidates = enumerate_window(A.ctx, w, opt.cap());
  int n = static_cast<int>(candidates.size());
  SearchBudget budget{opt.node_budget};
  std::vector<int> idx;
  // lexicographic combinations of candidate indices, size k
  std::function<bool(int, int)> search = [&](int k, int from) -> bool {
    if (static_cast<int>(idx.size()) == k) {
      FiniteSet F = pick(candidates, idx);
      SetSpec FA = product_set(F, A);
      ThickOutcome out = run_thick_check(FA, candidates, probes, budget);
      if (out.budget_out) return false;
      return out.thick;
    }
    for (int i = from; i < n; ++i) {
      if (budget.exhausted) return false;
      idx.push_back(i);
      if (search(k, i + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= kmax; ++k) {
    idx.clear();
    if (search(k, 0)) {
      r.value = k;
      r.holds = true;
      r.witness = pick(candidates, idx);
      return r;
    }
    if (budget.exhausted) {
      r.decided = false;
      r.notes.push_back("search budget exhausted");
      return r;
    }
  }
  r.decided = false;
  r.exactness = Exactness::lower_bound;
  r.value = kmax + 1;
  r.notes.push_back("no F of size <= kmax makes FA thick for the probe family");
  return r;
}

LargenessReport is_piecewise_syndetic(const SetSpec& A, const Window& w, int kmax,
                                      const ProbeFamily& probes, const SolveOptions& opt) {
  LargenessReport inner = thickness_index(A, w, kmax, probes, opt);
  LargenessReport r = base_report("piecewise_syndetic", A, w);
  r.extra = inner.extra;
  r.extra["thickness_index"] = inner.value ? nlohmann::json(*inner.value) : nlohmann::json();
  r.notes = inner.notes;
  r.decided = inner.decided;
  r.exactness = inner.exactness;
  r.value = inner.value;
  if (inner.decided) {
    r.holds = inner.holds;
    r.witness = inner.witness;
  } else if (inner.value && *inner.value == kmax + 1) {
    // exhausted all k <= kmax: negative relative to the probe family
    r.holds = false;
  }
  return r;
}

LargenessReport fatness(const SetSpec& A, const Window& w, const SolveOptions& opt) {
  LargenessReport r = base_report("fatness", A, w);
  Element id = Element::identity(A.ctx);
  if (!A.membership(id)) {
    r.holds = false;
    r.counterexample = FiniteSet::of({id});
    r.notes.push_back("identity not in set: D^-1 D always contains it, so no m works");
    return r;
  }
  QuotientGraph qg = QuotientGraph::build(A, w, opt.cap());
  SearchBudget budget{opt.node_budget};
  int alpha = max_cliquefree_subset_size(qg.graph, 2, budget);
  if (budget.exhausted) {
    r.decided = false;
    r.exactness = Exactness::lower_bound;
    r.value = alpha + 1;
    r.notes.push_back("budget exhausted; value is a lower bound on the window");
    return r;
  }
  SearchBudget b2{opt.node_budget};
  std::vector<int> witness_idx = lex_least_cliquefree_subset(qg.graph, 2, alpha, b2);
  if (b2.exhausted || static_cast<int>(witness_idx.size()) != alpha) {
    r.decided = false;
    r.value = alpha + 1;
    r.notes.push_back("witness reconstruction hit the budget");
    return r;
  }
  r.value = alpha + 1;
  r.holds = true;
  r.counterexample = pick(qg.vertices, witness_idx);
  r.exactness = Exactness::exact_on_window;
  r.notes.push_back("window value is a lower bound for the ambient group");
  return r;
}

LargenessReport kappa_fat_check(const SetSpec& A, const Window& w, int k,
                                const SolveOptions& opt) {
  if (k < 1) throw precondition_error("kappa_fat_check needs k >= 1");
  LargenessReport r = base_report("kappa_fat", A, w);
  r.extra["k"] = k;
  Element id = Element::identity(A.ctx);
  auto elems = enumerate_window(A.ctx, w, opt.cap());
  if (!A.membership(id)) {
    r.holds = false;
    int take = std::min<int>(k, static_cast<int>(elems.size()));
    r.counterexample = prefix_set(elems, take);
    r.notes.push_back("identity not in set: every k-subset is a counterexample");
    return r;
  }
  QuotientGraph qg = QuotientGraph::build(A, w, opt.cap());
  SearchBudget budget{opt.node_budget};
  Mask all = bits::make_mask(qg.graph.size(), true);
  bool exists = exists_cliquefree_subset(qg.graph, 2, {}, all, k, budget);
  if (budget.exhausted && !exists) {
    r.decided = false;
    r.notes.push_back("search budget exhausted");
    return r;
  }
  if (exists) {
    SearchBudget b2{opt.node_budget};
    std::vector<int> ce = lex_least_cliquefree_subset(qg.graph, 2, k, b2);
    r.holds = false;
    if (static_cast<int>(ce.size()) == k) r.counterexample = pick(qg.vertices, ce);
  } else {
    r.holds = true;
    r.notes.push_back("no independent k-subset exists on the window (exhaustive)");
  }
  return r;
}

LargenessReport fat_ramsey_m(const SetSpec& A, const Window& w, int n,
                             const SolveOptions& opt) {
  if (n < 2) throw precondition_error("fat_ramsey_m needs n >= 2");
  LargenessReport r = base_report("fat_ramsey_m", A, w);
  r.extra["n"] = n;
  Element id = Element::identity(A.ctx);
  if (!A.membership(id)) {
    r.holds = false;
    r.counterexample = FiniteSet::of({id});
    r.notes.push_back("identity not in set: no m works");
    return r;
  }
  QuotientGraph qg = QuotientGraph::build(A, w, opt.cap());
  SearchBudget budget{opt.node_budget};
  int best = max_cliquefree_subset_size(qg.graph, n, budget);
  if (budget.exhausted) {
    r.decided = false;
    r.exactness = Exactness::lower_bound;
    r.value = best + 1;
    r.notes.push_back("budget exhausted; value is a lower bound");
    return r;
  }
  SearchBudget b2{opt.node_budget};
  std::vector<int> witness_idx = lex_least_cliquefree_subset(qg.graph, n, best, b2);
  r.value = best + 1;
  r.holds = true;
  r.exactness = Exactness::exact_on_window;
  if (static_cast<int>(witness_idx.size()) == best)
    r.counterexample = pick(qg.vertices, witness_idx);
  r.notes.push_back("counterexample is a largest subset with no n-element good cluster");
  return r;
}

namespace {

// DFS for a one-to-one sequence all of whose later-vs-earlier quotients
// avoid A. Boolean sequences are order-insensitive, so they are searched
// as increasing tuples.
struct SequenceSearch {
  const SetSpec& A;
  const std::vector<Element>& elems;
  int k;
  Side side;
  SearchBudget& budget;
  bool increasing_only;
  std::vector<int> chosen;

  bool quot_avoids(int m_idx, int n_idx) {
    const Element& gm = elems[static_cast<size_t>(m_idx)];
    const Element& gn = elems[static_cast<size_t>(n_idx)];
    Element q = side == Side::left ? op(inverse(gm), gn) : op(gn, inverse(gm));
    return !A.membership(q);
  }

  bool dfs() {
    if (static_cast<int>(chosen.size()) == k) return true;
    int start = 0;
    if (increasing_only && !chosen.empty()) start = chosen.back() + 1;
    for (int i = start; i < static_cast<int>(elems.size()); ++i) {
      if (!budget.tick()) return false;
      if (!increasing_only &&
          std::find(chosen.begin(), chosen.end(), i) != chosen.end())
        continue;
      bool ok = true;
      for (int m : chosen) {
        if (!quot_avoids(m, i)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      if (dfs()) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

LargenessReport is_delta_star_k(const SetSpec& A, const Window& w, int k, Side side,
                                const SolveOptions& opt) {
  if (k < 2) throw precondition_error("is_delta_star_k needs k >= 2");
  LargenessReport r = base_report("delta_star_k", A, w);
  r.extra["k"] = k;
  r.extra["side"] = side == Side::left ? "left" : "right";
  auto elems = enumerate_window(A.ctx, w, opt.cap());
  SearchBudget budget{opt.node_budget};
  SequenceSearch s{A, elems, k, side, budget, A.ctx.family == Family::boolean, {}};
  bool found = s.dfs();
  if (!found && budget.exhausted) {
    r.decided = false;
    r.notes.push_back("search budget exhausted");
    return r;
  }
  if (found) {
    r.holds = false;
    std::vector<Element> seq;
    for (int i : s.chosen) seq.push_back(elems[static_cast<size_t>(i)]);
    r.counterexample_sequence = seq;
    r.counterexample = FiniteSet::of(seq);
  } else {
    r.holds = true;
    r.notes.push_back("no avoiding k-sequence on the window (exhaustive)");
  }
  return r;
}

namespace {

struct FpSearch {
  const SetSpec& A;
  const std::vector<Element>& elems;
  int n;
  SearchBudget& budget;
  bool increasing_only;
  std::vector<int> chosen;
  std::vector<Element> prods;  // finite products of the chosen prefix

  bool dfs() {
    if (static_cast<int>(chosen.size()) == n) return true;
    int start = 0;
    if (increasing_only && !chosen.empty()) start = chosen.back() + 1;
    for (int i = start; i < static_cast<int>(elems.size()); ++i) {
      if (!budget.tick()) return false;
      if (!increasing_only &&
          std::find(chosen.begin(), chosen.end(), i) != chosen.end())
        continue;
      const Element& b = elems[static_cast<size_t>(i)];
      std::vector<Element> added;
      bool ok = !A.membership(b);
      if (ok) {
        added.push_back(b);
        for (const Element& p : prods) {
          Element q = op(p, b);
          if (A.membership(q)) {
            ok = false;
            break;
          }
          added.push_back(q);
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      size_t before = prods.size();
      prods.insert(prods.end(), added.begin(), added.end());
      if (dfs()) return true;
      prods.resize(before);
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

LargenessReport is_ip_star(const SetSpec& A, const Window& w, int n, const SolveOptions& opt) {
  if (n < 1) throw precondition_error("is_ip_star needs n >= 1");
  LargenessReport r = base_report("ip_star", A, w);
  r.extra["n"] = n;
  auto elems = enumerate_window(A.ctx, w, opt.cap());
  SearchBudget budget{opt.node_budget};
  FpSearch s{A, elems, n, budget, A.ctx.family != Family::free_group, {}, {}};
  bool found = s.dfs();
  if (!found && budget.exhausted) {
    r.decided = false;
    r.notes.push_back("search budget exhausted");
    return r;
  }
  if (found) {
    r.holds = false;
    std::vector<Element> seq;
    for (int i : s.chosen) seq.push_back(elems[static_cast<size_t>(i)]);
    r.counterexample_sequence = seq;
    r.counterexample = FiniteSet::of(seq);
  } else {
    r.holds = true;
    r.notes.push_back("every n-sequence from the window has a product in the set");
  }
  return r;
}

LargenessReport check_3fat_cover(const SetSpec& S, const Window& w, const SolveOptions& opt) {
  LargenessReport r = base_report("three_fat_cover", S, w);
  FiniteSet sample = enumerate_set(S, w, opt.cap());
  // hypothesis: S meets neither SS nor S^-1 S^-1, checked on the window sample
  std::optional<Element> violation;
  std::string which;
  for (const Element& a : sample) {
    for (const Element& b : sample) {
      Element prod = op(a, b);
      if (S.membership(prod)) {
        violation = prod;
        which = "SS";
        break;
      }
      Element iprod = op(inverse(a), inverse(b));
      if (S.membership(iprod)) {
        violation = iprod;
        which = "S^-1S^-1";
        break;
      }
    }
    if (violation) break;
  }
  if (violation) {
    r.extra["hypothesis_holds"] = false;
    r.extra["violation_kind"] = which;
    r.holds = false;
    r.counterexample = FiniteSet::of({*violation});
    r.notes.push_back("hypothesis S cap (SS u S^-1S^-1) = empty fails on the window");
    return r;
  }
  r.extra["hypothesis_holds"] = true;
  LargenessReport conclusion = kappa_fat_check(complement(S), w, 3, opt);
  r.extra["conclusion"] = report_to_json(conclusion);
  r.decided = conclusion.decided;
  if (conclusion.decided) {
    r.holds = conclusion.holds;
    if (conclusion.holds.value_or(false)) {
      r.witness = sample;
      r.notes.push_back("complement is 3-fat on the window");
    } else {
      r.counterexample = conclusion.counterexample;
    }
  } else {
    r.notes = conclusion.notes;
  }
  return r;
}

LargenessReport duality_check(const SetSpec& A, const Window& w, int pad, int kmax,
                              const ProbeFamily& probes, const SolveOptions& opt) {
  LargenessReport r = base_report("duality", A, w);
  LargenessReport synd = syndeticity_index(A, w, pad, kmax, opt);
  LargenessReport thick = thick_on_window(complement(A), w, probes, opt);
  bool synd_pos = synd.decided && synd.holds.value_or(false);
  if (!synd.decided)
    r.notes.push_back("syndeticity undecided at kmax; treated as not syndetic on window");
  bool thick_pos = thick.holds.value_or(false);
  r.extra["syndetic_on_window"] = synd_pos;
  r.extra["syndeticity"] = report_to_json(synd);
  r.extra["complement_thick_on_window"] = thick_pos;
  r.extra["complement_thick"] = report_to_json(thick);
  r.holds = synd_pos != thick_pos;
  if (*r.holds) {
    if (synd_pos && synd.witness)
      r.witness = synd.witness;
    else if (thick.witness_element)
      r.witness_element = thick.witness_element;
    else
      r.witness = FiniteSet();
  } else {
    r.counterexample = FiniteSet();
    r.notes.push_back("windowed verdicts disagree with the duality");
  }
  return r;
}

}  // namespace largeset
