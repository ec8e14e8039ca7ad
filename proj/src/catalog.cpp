#include "largeset/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace largeset {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int64_t parse_i64(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw config_error("");
    return v;
  } catch (...) {
    throw config_error("bad integer for " + what + ": '" + s + "'");
  }
}

}  // namespace

LengthSet LengthSet::of_list(std::vector<uint32_t> lengths) {
  LengthSet t;
  t.kind_ = Kind::list;
  std::sort(lengths.begin(), lengths.end());
  t.list_ = std::move(lengths);
  return t;
}

LengthSet LengthSet::residue(uint32_t modulus, uint32_t remainder) {
  if (modulus == 0) throw precondition_error("LengthSet residue with modulus 0");
  LengthSet t;
  t.kind_ = Kind::residue;
  t.modulus_ = modulus;
  t.remainder_ = remainder % modulus;
  return t;
}

LengthSet LengthSet::of_intervals(std::vector<std::pair<uint32_t, uint32_t>> closed) {
  for (auto& [a, b] : closed)
    if (a > b) throw precondition_error("LengthSet interval with a > b");
  LengthSet t;
  t.kind_ = Kind::intervals;
  t.intervals_ = std::move(closed);
  return t;
}

LengthSet LengthSet::parse(const std::string& s) {
  if (s == "even") return residue(2, 0);
  if (s == "odd") return residue(2, 1);
  if (s.rfind("mod:", 0) == 0) {
    auto parts = split(s, ':');
    if (parts.size() != 3) throw config_error("bad length set: " + s);
    return residue(static_cast<uint32_t>(parse_i64(parts[1], "modulus")),
                   static_cast<uint32_t>(parse_i64(parts[2], "remainder")));
  }
  if (s.rfind("ivl:", 0) == 0) {
    std::vector<std::pair<uint32_t, uint32_t>> ivls;
    for (const std::string& item : split(s.substr(4), ',')) {
      auto ab = split(item, ':');
      if (ab.size() != 2) throw config_error("bad length interval: " + item);
      ivls.emplace_back(static_cast<uint32_t>(parse_i64(ab[0], "interval lo")),
                        static_cast<uint32_t>(parse_i64(ab[1], "interval hi")));
    }
    return of_intervals(std::move(ivls));
  }
  if (s.empty()) return of_list({});
  std::vector<uint32_t> lens;
  for (const std::string& item : split(s, ','))
    lens.push_back(static_cast<uint32_t>(parse_i64(item, "length")));
  return of_list(std::move(lens));
}

bool LengthSet::contains(size_t len) const {
  switch (kind_) {
    case Kind::list:
      return std::binary_search(list_.begin(), list_.end(), static_cast<uint32_t>(len));
    case Kind::residue:
      return len % modulus_ == remainder_;
    case Kind::intervals:
      for (auto& [a, b] : intervals_)
        if (a <= len && len <= b) return true;
      return false;
  }
  return false;
}

std::string LengthSet::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::list: {
      for (size_t i = 0; i < list_.size(); ++i) os << (i ? "," : "") << list_[i];
      break;
    }
    case Kind::residue:
      os << "mod:" << modulus_ << ':' << remainder_;
      break;
    case Kind::intervals: {
      os << "ivl:";
      for (size_t i = 0; i < intervals_.size(); ++i)
        os << (i ? "," : "") << intervals_[i].first << ':' << intervals_[i].second;
      break;
    }
  }
  return os.str();
}

SetSpec make_coset(int64_t d, int64_t r, std::optional<Window> w) {
  if (d < 1) throw precondition_error("coset modulus must be positive");
  SetSpec out;
  out.name = "coset(" + std::to_string(d) + "," + std::to_string(r) + ")";
  out.ctx = GroupCtx::integers();
  out.window = w.value_or(Window::int_range(-50, 50));
  out.provenance = "coset d=" + std::to_string(d) + " r=" + std::to_string(r);
  out.membership = [d, r](const Element& g) {
    int64_t m = (g.value() - r) % d;
    return m == 0;
  };
  return out;
}

SetSpec make_interval_union(std::vector<std::pair<int64_t, int64_t>> pairs,
                            std::optional<Window> w) {
  for (auto& [a, b] : pairs)
    if (a > b) throw precondition_error("interval with a > b");
  Window win = w.value_or([&] {
    int64_t lo = 0, hi = 0;
    for (auto& [a, b] : pairs) {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
    return Window::int_range(lo, hi);
  }());
  SetSpec out;
  std::ostringstream name;
  name << "interval_union(";
  for (size_t i = 0; i < pairs.size(); ++i)
    name << (i ? "," : "") << '[' << pairs[i].first << ',' << pairs[i].second << ']';
  name << ')';
  out.name = name.str();
  out.ctx = GroupCtx::integers();
  out.window = win;
  out.provenance = out.name;
  out.membership = [pairs](const Element& g) {
    int64_t v = g.value();
    for (auto& [a, b] : pairs)
      if (a <= v && v <= b) return true;
    return false;
  };
  return out;
}

namespace {

bool is_positive_cube(int64_t x) {
  if (x < 1) return false;
  int64_t k = static_cast<int64_t>(std::llround(std::cbrt(static_cast<double>(x))));
  for (int64_t c = std::max<int64_t>(1, k - 2); c <= k + 2; ++c)
    if (c * c * c == x) return true;
  return false;
}

}  // namespace

SetSpec make_cube_gap_complement(std::optional<Window> w) {
  SetSpec out;
  out.name = "cube_gap_complement";
  out.ctx = GroupCtx::booleans();
  out.window = w.value_or(Window::boolean_ball(2, -12, 12));
  out.provenance = "all words except two-letter {m,n} with n-m a positive cube";
  out.membership = [](const Element& g) {
    const auto& ls = g.letters();
    if (ls.size() != 2) return true;
    return !is_positive_cube(ls[1] - ls[0]);
  };
  return out;
}

SetSpec make_length_filtered(LengthSet T, std::optional<Window> w) {
  SetSpec out;
  out.name = "length_filtered(" + T.str() + ")";
  out.ctx = GroupCtx::booleans();
  out.window = w.value_or(Window::boolean_ball(4, 1, 8));
  out.provenance = "words with length in {" + T.str() + "}";
  out.membership = [T](const Element& g) { return T.contains(g.letters().size()); };
  return out;
}

SetSpec make_s_prime(const SetSpec& S, const FiniteSet& shifts, std::optional<Window> w) {
  if (S.ctx.family != Family::integer)
    throw family_error("s_prime needs an integer base set");
  if (shifts.empty() || shifts[0].family() != Family::integer)
    throw precondition_error("s_prime needs a nonempty integer shift set");
  const IntRange* range = S.window.as_int();
  if (!range) throw precondition_error("s_prime base set must carry an integer window");

  std::vector<int64_t> s_vals;
  for (const Element& e : shifts) s_vals.push_back(e.value());

  // Cover hypothesis: every point of the validation range lies in some
  // s_k + S.
  auto in_S = S.membership;
  for (int64_t v = range->lo; v <= range->hi; ++v) {
    bool covered = false;
    for (int64_t sk : s_vals)
      if (in_S(Element::integer(v - sk))) {
        covered = true;
        break;
      }
    if (!covered)
      throw precondition_error("s_prime cover hypothesis fails at " + std::to_string(v) +
                               " on validation range [" + std::to_string(range->lo) + "," +
                               std::to_string(range->hi) + "]");
  }

  SetSpec out;
  out.name = "s_prime(" + S.name + ")";
  out.ctx = GroupCtx::booleans();
  out.window = w.value_or(Window::boolean_ball(3, std::max<int64_t>(range->lo, -15),
                                               std::min<int64_t>(range->hi, 15)));
  out.provenance = "s_prime over " + S.name + " shifts=" + shifts.str() + " validated=[" +
                   std::to_string(range->lo) + "," + std::to_string(range->hi) + "]";
  out.validated_letter_range = {range->lo, range->hi};
  out.membership = [s_vals, in_S](const Element& g) {
    const auto& ls = g.letters();
    if (ls.empty()) return false;
    int64_t the_shift = 0;
    int hits = 0;
    int64_t sum = 0;
    for (int64_t x : ls) {
      sum += x;
      if (std::find(s_vals.begin(), s_vals.end(), x) != s_vals.end()) {
        the_shift = x;
        ++hits;
      }
    }
    if (hits != 1) return false;
    return in_S(Element::integer(sum - 2 * the_shift));
  };
  return out;
}

SetSpec make_ends_with_a(std::optional<Window> w) {
  SetSpec out;
  out.name = "ends_with_a";
  out.ctx = GroupCtx::free_of_rank(2);
  out.window = w.value_or(Window::free_ball(6));
  out.provenance = "free rank 2, words whose last letter is a";
  out.membership = [](const Element& g) {
    return !g.gens().empty() && g.gens().back() == 1;
  };
  return out;
}

SetSpec make_letter_coset(int64_t d, int64_t r, std::optional<Window> w,
                          std::optional<Element> translate_by) {
  if (d < 1) throw precondition_error("letter coset modulus must be positive");
  SetSpec out;
  out.name = "letter_coset(" + std::to_string(d) + "," + std::to_string(r) + ")";
  out.ctx = GroupCtx::booleans();
  // radius-1 default: candidate samples are letter sets; pair sums reach
  // length 2 without the window itself growing quadratically
  out.window = w.value_or(Window::boolean_ball(1, 0, 350));
  out.provenance = "words whose letters are congruent to " + std::to_string(r) + " mod " +
                   std::to_string(d);
  out.membership = [d, r](const Element& g) {
    for (int64_t l : g.letters())
      if ((l - r) % d != 0) return false;
    return true;
  };
  if (translate_by) {
    Element t = *translate_by;
    out = translate(t, out);
    out.name = "translated_" + out.name;
  }
  return out;
}

namespace {

std::optional<Window> window_param(const ParamMap& params) {
  auto it = params.find("window");
  if (it == params.end()) return std::nullopt;
  return Window::parse(it->second);
}

std::string require_param(const ParamMap& params, const std::string& key,
                          const std::string& ctor) {
  auto it = params.find(key);
  if (it == params.end())
    throw config_error(ctor + " requires parameter '" + key + "'");
  return it->second;
}

void reject_unknown(const ParamMap& params, std::initializer_list<const char*> known,
                    const std::string& ctor) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* c : known)
      if (k == c) ok = true;
    if (!ok) throw config_error("unknown parameter '" + k + "' for construction " + ctor);
  }
}

std::vector<std::pair<int64_t, int64_t>> parse_intervals(const std::string& s) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (const std::string& item : split(s, ',')) {
    auto ab = split(item, ':');
    if (ab.size() != 2) throw config_error("bad interval '" + item + "' (want A:B)");
    out.emplace_back(parse_i64(ab[0], "interval lo"), parse_i64(ab[1], "interval hi"));
  }
  return out;
}

// Inline construction of an integer base set for s_prime: "coset:D:R" |
// "intervals:A:B,A:B" | "whole:LO:HI".
SetSpec parse_integer_base(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() == 3 && parts[0] == "coset")
    return make_coset(parse_i64(parts[1], "d"), parse_i64(parts[2], "r"));
  if (parts.size() >= 2 && parts[0] == "intervals")
    return make_interval_union(parse_intervals(s.substr(10)));
  if (parts.size() == 3 && parts[0] == "whole")
    return whole_group(GroupCtx::integers(),
                       Window::int_range(parse_i64(parts[1], "lo"), parse_i64(parts[2], "hi")));
  throw config_error("bad base set spec: " + s);
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"coset", "integer", "d:int>=1, r:int, [window]", "r + dZ"},
      {"interval_union", "integer", "intervals:A:B,A:B,..., [window]",
       "union of closed integer intervals"},
      {"cube_gap_complement", "boolean", "[window]",
       "all words except two-letter {m,n} with n-m a positive cube"},
      {"length_filtered", "boolean", "lengths:even|odd|L1,L2|mod:M:R|ivl:A:B,..., [window]",
       "words whose length lies in the given set"},
      {"s_prime", "boolean", "base:coset:D:R|intervals:...|whole:LO:HI, shifts:S1,S2,..., [window]",
       "layered set over a syndetic integer base; exactly one shift letter, letter sum in 2s+S"},
      {"ends_with_a", "free", "[window]", "free rank 2, words whose last letter is a"},
      {"letter_coset", "boolean", "d:int>=1, r:int, [window]",
       "words whose letters all lie in r + dZ"},
      {"whole", "any", "family:integer|boolean|free, [window]", "the whole group"},
      {"empty", "any", "family:integer|boolean|free, [window]", "the empty set"},
  };
  return entries;
}

SetSpec build_catalog_set(const std::string& name, const ParamMap& params) {
  if (name == "coset") {
    reject_unknown(params, {"d", "r", "window"}, name);
    return make_coset(parse_i64(require_param(params, "d", name), "d"),
                      parse_i64(require_param(params, "r", name), "r"), window_param(params));
  }
  if (name == "interval_union") {
    reject_unknown(params, {"intervals", "window"}, name);
    return make_interval_union(parse_intervals(require_param(params, "intervals", name)),
                               window_param(params));
  }
  if (name == "cube_gap_complement") {
    reject_unknown(params, {"window"}, name);
    return make_cube_gap_complement(window_param(params));
  }
  if (name == "length_filtered") {
    reject_unknown(params, {"lengths", "window"}, name);
    return make_length_filtered(LengthSet::parse(require_param(params, "lengths", name)),
                                window_param(params));
  }
  if (name == "s_prime") {
    reject_unknown(params, {"base", "shifts", "window"}, name);
    SetSpec base = parse_integer_base(require_param(params, "base", name));
    std::vector<Element> shift_elems;
    for (const std::string& item : split(require_param(params, "shifts", name), ','))
      shift_elems.push_back(Element::integer(parse_i64(item, "shift")));
    return make_s_prime(base, FiniteSet::of(std::move(shift_elems)), window_param(params));
  }
  if (name == "ends_with_a") {
    reject_unknown(params, {"window"}, name);
    return make_ends_with_a(window_param(params));
  }
  if (name == "letter_coset") {
    reject_unknown(params, {"d", "r", "window"}, name);
    return make_letter_coset(parse_i64(require_param(params, "d", name), "d"),
                             parse_i64(require_param(params, "r", name), "r"),
                             window_param(params));
  }
  if (name == "whole" || name == "empty") {
    reject_unknown(params, {"family", "window"}, name);
    std::string fam = require_param(params, "family", name);
    GroupCtx ctx;
    Window w = Window::int_range(-50, 50);
    if (fam == "integer") {
      ctx = GroupCtx::integers();
    } else if (fam == "boolean") {
      ctx = GroupCtx::booleans();
      w = Window::boolean_ball(2, -6, 6);
    } else if (fam == "free") {
      ctx = GroupCtx::free_of_rank(2);
      w = Window::free_ball(3);
    } else {
      throw config_error("unknown family '" + fam + "'");
    }
    if (auto wp = window_param(params)) w = *wp;
    return name == "whole" ? whole_group(ctx, w) : empty_set(ctx, w);
  }
  throw config_error("unknown construction '" + name + "'");
}

}  // namespace largeset
