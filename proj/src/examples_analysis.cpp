#include "largeset/examples_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace largeset {

nlohmann::json DensityReport::to_json() const {
  nlohmann::json j;
  j["set"] = set_name;
  j["window_len"] = window_len;
  j["best_start"] = best_start;
  j["hits"] = hits;
  j["density"] = density;
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : trend)
    rows.push_back({{"d", r.d}, {"start", r.start}, {"hits", r.hits}, {"density", r.density}});
  j["trend"] = rows;
  return j;
}

DensityReport banach_density_estimate(const SetSpec& S, const Window& w,
                                      const std::vector<int64_t>& d_list) {
  if (S.ctx.family != Family::integer)
    throw family_error("banach_density_estimate needs an integer set");
  const IntRange* r = w.as_int();
  if (!r) throw family_error("banach_density_estimate needs an integer window");
  if (d_list.empty()) throw precondition_error("empty interval length list");
  int64_t lo = r->lo, hi = r->hi;
  // prefix counts over the window
  std::vector<int64_t> prefix(static_cast<size_t>(hi - lo + 2), 0);
  for (int64_t v = lo; v <= hi; ++v)
    prefix[static_cast<size_t>(v - lo + 1)] =
        prefix[static_cast<size_t>(v - lo)] + (S.membership(Element::integer(v)) ? 1 : 0);
  DensityReport rep;
  rep.set_name = S.name;
  for (int64_t d : d_list) {
    if (d < 1 || d > hi - lo + 1)
      throw precondition_error("interval length " + std::to_string(d) + " does not fit window");
    DensityReport::Row row;
    row.d = d;
    row.hits = -1;
    for (int64_t start = lo; start + d - 1 <= hi; ++start) {
      int64_t c = prefix[static_cast<size_t>(start - lo + d)] -
                  prefix[static_cast<size_t>(start - lo)];
      if (c > row.hits) {
        row.hits = c;
        row.start = start;
      }
    }
    row.density = static_cast<double>(row.hits) / static_cast<double>(d);
    rep.trend.push_back(row);
    if (d >= rep.window_len) {
      rep.window_len = d;
      rep.best_start = row.start;
      rep.hits = row.hits;
      rep.density = row.density;
    }
  }
  return rep;
}

namespace {

std::optional<int64_t> exact_cube_root(int64_t d) {
  if (d == 0) return std::nullopt;
  int64_t a = std::llabs(d);
  int64_t z = static_cast<int64_t>(std::llround(std::cbrt(static_cast<double>(a))));
  for (int64_t c = std::max<int64_t>(1, z - 2); c <= z + 2; ++c)
    if (c * c * c == a) return d > 0 ? c : -c;
  return std::nullopt;
}

}  // namespace

std::optional<SarkozyWitness> sarkozy_witness(const FiniteSet& S) {
  if (S.empty()) throw precondition_error("sarkozy_witness needs a nonempty set");
  for (const Element& b : S) {
    for (const Element& a : S) {
      if (a == b) continue;
      if (auto z = exact_cube_root(a.value() - b.value()))
        return SarkozyWitness{a.value(), b.value(), *z};
    }
  }
  return std::nullopt;
}

nlohmann::json CubeSearchReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : candidates) {
    nlohmann::json j;
    j["candidate"] = c.name;
    j["syndetic_decided"] = c.syndetic_decided;
    j["syndetic_on_window"] = c.syndetic_on_window;
    j["pairs_scanned"] = c.pairs_scanned;
    if (c.violation)
      j["violation"] = {c.violation->first.str(), c.violation->second.str()};
    else
      j["violation"] = nullptr;
    arr.push_back(j);
  }
  return nlohmann::json{{"candidates", arr}};
}

CubeSearchReport cube_noncontainment_search(const std::vector<SetSpec>& candidates,
                                            const Window& w, int pad, int kmax,
                                            const SolveOptions& opt) {
  CubeSearchReport rep;
  for (const SetSpec& B : candidates) {
    CubeCandidateReport cr;
    cr.name = B.name;
    LargenessReport synd = syndeticity_index(B, w, pad, kmax, opt);
    cr.syndetic_decided = synd.decided;
    cr.syndetic_on_window = synd.decided && synd.holds.value_or(false);
    FiniteSet sample = enumerate_set(B, w, opt.cap());
    const auto& elems = sample.elements();
    for (size_t i = 0; i < elems.size() && !cr.violation; ++i) {
      for (size_t j = i + 1; j < elems.size(); ++j) {
        ++cr.pairs_scanned;
        Element s = op(elems[i], elems[j]);
        const auto& ls = s.letters();
        if (ls.size() == 2 && exact_cube_root(ls[1] - ls[0]).has_value() && ls[1] > ls[0]) {
          cr.violation = {elems[i], elems[j]};
          break;
        }
      }
    }
    rep.candidates.push_back(std::move(cr));
  }
  return rep;
}

nlohmann::json DiscreteSetReport::to_json() const {
  nlohmann::json j;
  nlohmann::json d = nlohmann::json::array();
  for (const Element& g : D) d.push_back(g.str());
  j["D"] = d;
  j["identity_free"] = identity_free;
  j["levels_decreasing"] = levels_decreasing;
  j["all_separated"] = all_separated;
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : certificates)
    certs.push_back({{"g", c.g.str()}, {"level", c.level}, {"outside_count", c.outside_count}});
  j["certificates"] = certs;
  return j;
}

DiscreteSetReport discrete_set_construct(const std::vector<FiniteSet>& Fs,
                                         const std::vector<SetSpec>& As, const Window& w) {
  if (Fs.size() != As.size())
    throw precondition_error("discrete_set_construct needs equally many F and A levels");
  if (Fs.empty()) throw precondition_error("discrete_set_construct needs at least one level");
  DiscreteSetReport rep;
  // decreasing levels, checked on the window
  rep.levels_decreasing = true;
  GroupCtx ctx = As[0].ctx;
  std::vector<Element> window_elems = enumerate_window(ctx, w);
  for (size_t n = 0; n + 1 < As.size() && rep.levels_decreasing; ++n)
    for (const Element& g : window_elems)
      if (As[n + 1].membership(g) && !As[n].membership(g)) {
        rep.levels_decreasing = false;
        break;
      }
  if (!rep.levels_decreasing)
    throw precondition_error("levels are not decreasing on the window");

  std::vector<Element> d_elems;
  for (size_t n = 0; n < Fs.size(); ++n) {
    for (const Element& a : Fs[n]) {
      for (const Element& b : Fs[n]) {
        if (a == b) continue;
        Element q = op(inverse(a), b);
        if (As[n].membership(q)) d_elems.push_back(q);
      }
    }
  }
  rep.D = FiniteSet::of(std::move(d_elems));
  rep.identity_free = !rep.D.contains(Element::identity(ctx));
  rep.all_separated = true;
  for (const Element& g : rep.D) {
    DiscreteSetReport::Certificate cert;
    cert.g = g;
    for (size_t n = 0; n < As.size(); ++n) {
      if (!As[n].membership(g)) {
        cert.level = static_cast<int>(n);
        for (const Element& d : rep.D)
          if (!As[n].membership(d)) ++cert.outside_count;
        break;
      }
    }
    if (cert.level < 0) rep.all_separated = false;
    rep.certificates.push_back(cert);
  }
  return rep;
}

nlohmann::json DeltaRepresentation::to_json() const {
  nlohmann::json j;
  nlohmann::json seq = nlohmann::json::array();
  for (const Element& g : sequence) seq.push_back(g.str());
  j["sequence"] = seq;
  j["covered"] = covered;
  j["total"] = total;
  j["coverage"] = coverage;
  return j;
}

DeltaRepresentation thick_delta_representation(const SetSpec& T, const Window& w, int L,
                                               const ProbeFamily& probes,
                                               const SolveOptions& opt) {
  if (T.ctx.family == Family::free_group)
    throw family_error("thick_delta_representation covers boolean and integer families");
  LargenessReport thick = thick_on_window(T, w, probes, opt);
  if (!thick.holds.value_or(false))
    throw precondition_error("set is not thick on the window for the probe family");
  Element id = Element::identity(T.ctx);
  DeltaRepresentation rep;
  for (const Element& g : enumerate_window(T.ctx, w, opt.cap())) {
    if (static_cast<int>(rep.sequence.size()) >= L) break;
    bool ok = true;
    for (const Element& prev : rep.sequence) {
      if (prev == g) {
        ok = false;
        break;
      }
      Element q = op(inverse(prev), g);
      if (!(q == id) && !T.membership(q)) {
        ok = false;
        break;
      }
    }
    if (ok) rep.sequence.push_back(g);
  }
  FiniteSet sample = enumerate_set(T, w, opt.cap());
  rep.total = static_cast<int64_t>(sample.size());
  if (rep.sequence.size() >= 2) {
    FiniteSet delta = delta_set(rep.sequence, Side::left);
    for (const Element& g : delta)
      if (w.contains(g) && sample.contains(g)) ++rep.covered;
  }
  rep.coverage = rep.total ? static_cast<double>(rep.covered) / static_cast<double>(rep.total)
                           : 0.0;
  return rep;
}

std::optional<FiniteSet> subgroup_in_thick(const SetSpec& T, const Window& w, size_t size,
                                           const SolveOptions& opt) {
  if (T.ctx.family != Family::boolean)
    throw family_error("subgroup_in_thick needs a boolean-family set");
  if (size == 0 || (size & (size - 1)) != 0) return std::nullopt;  // subgroup orders are 2^k
  Element zero = Element::identity(T.ctx);
  std::set<Element> H = {zero};
  for (const Element& g : enumerate_window(T.ctx, w, opt.cap())) {
    if (H.size() >= size) break;
    if (g.is_identity() || H.count(g)) continue;
    // candidate extension: H u gH
    std::vector<Element> extension;
    bool ok = true;
    for (const Element& h : H) {
      Element x = op(g, h);
      if (!w.contains(x) || !T.membership(x)) {
        ok = false;
        break;
      }
      extension.push_back(x);
    }
    if (!ok) continue;
    H.insert(extension.begin(), extension.end());
  }
  if (H.size() != size) return std::nullopt;
  return FiniteSet::of(std::vector<Element>(H.begin(), H.end()));
}

}  // namespace largeset
