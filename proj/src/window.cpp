#include "largeset/window.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace largeset {

namespace {

constexpr uint64_t kSat = UINT64_MAX / 4;

uint64_t sat_add(uint64_t a, uint64_t b) {
  if (a >= kSat || b >= kSat || a + b >= kSat) return kSat;
  return a + b;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kSat || b >= kSat || a > kSat / b) return kSat;
  return a * b;
}

uint64_t sat_choose(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r = sat_mul(r, n - k + i);
    if (r >= kSat) return kSat;
    r /= i;
  }
  return r;
}

}  // namespace

Window Window::int_range(int64_t lo, int64_t hi) {
  if (lo > hi) throw precondition_error("IntRange with lo > hi");
  if (lo > 0 || hi < 0)
    throw precondition_error("IntRange must contain the identity 0");
  Window w;
  w.spec_ = IntRange{lo, hi};
  return w;
}

Window Window::boolean_ball(int max_len, int64_t letter_lo, int64_t letter_hi) {
  if (max_len < 0) throw precondition_error("BooleanBall with negative max_len");
  if (letter_lo > letter_hi) throw precondition_error("BooleanBall with empty letter range");
  Window w;
  w.spec_ = BooleanBall{max_len, letter_lo, letter_hi};
  return w;
}

Window Window::free_ball(int max_len) {
  if (max_len < 0) throw precondition_error("FreeBall with negative max_len");
  Window w;
  w.spec_ = FreeBall{max_len};
  return w;
}

Window Window::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  auto as_i64 = [&](const std::string& s) {
    size_t pos = 0;
    int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw config_error("bad integer in window spec: " + s);
    return v;
  };
  try {
    if (parts.size() == 3 && parts[0] == "int")
      return int_range(as_i64(parts[1]), as_i64(parts[2]));
    if (parts.size() == 4 && parts[0] == "bool")
      return boolean_ball(static_cast<int>(as_i64(parts[1])), as_i64(parts[2]), as_i64(parts[3]));
    if (parts.size() == 2 && parts[0] == "free")
      return free_ball(static_cast<int>(as_i64(parts[1])));
  } catch (const std::invalid_argument&) {
    throw config_error("malformed window spec: " + spec);
  } catch (const std::out_of_range&) {
    throw config_error("malformed window spec: " + spec);
  }
  throw config_error("malformed window spec: " + spec +
                     " (expected int:LO:HI, bool:MAXLEN:LO:HI or free:MAXLEN)");
}

std::string Window::str() const {
  std::ostringstream os;
  if (const auto* r = as_int()) {
    os << "int:" << r->lo << ':' << r->hi;
  } else if (const auto* b = as_boolean()) {
    os << "bool:" << b->max_len << ':' << b->letter_lo << ':' << b->letter_hi;
  } else if (const auto* f = as_free()) {
    os << "free:" << f->max_len;
  }
  return os.str();
}

Family Window::family() const {
  if (as_int()) return Family::integer;
  if (as_boolean()) return Family::boolean;
  return Family::free_group;
}

uint64_t Window::count(const GroupCtx& ctx) const {
  if (const auto* r = as_int()) {
    return static_cast<uint64_t>(r->hi - r->lo + 1);
  }
  if (const auto* b = as_boolean()) {
    uint64_t n = static_cast<uint64_t>(b->letter_hi - b->letter_lo + 1);
    uint64_t total = 0;
    for (int k = 0; k <= b->max_len; ++k)
      total = sat_add(total, sat_choose(n, static_cast<uint64_t>(k)));
    return total;
  }
  const auto* f = as_free();
  uint64_t two_r = 2 * static_cast<uint64_t>(ctx.rank);
  uint64_t total = 1, layer = 1;
  for (int k = 1; k <= f->max_len; ++k) {
    layer = sat_mul(layer, k == 1 ? two_r : two_r - 1);
    total = sat_add(total, layer);
  }
  return total;
}

bool Window::contains(const Element& g) const {
  if (const auto* r = as_int()) {
    if (g.family() != Family::integer) return false;
    return r->lo <= g.value() && g.value() <= r->hi;
  }
  if (const auto* b = as_boolean()) {
    if (g.family() != Family::boolean) return false;
    if (g.letters().size() > static_cast<size_t>(b->max_len)) return false;
    for (int64_t x : g.letters())
      if (x < b->letter_lo || x > b->letter_hi) return false;
    return true;
  }
  const auto* f = as_free();
  if (g.family() != Family::free_group) return false;
  return g.gens().size() <= static_cast<size_t>(f->max_len);
}

Window Window::padded(int pad) const {
  if (pad < 0) throw precondition_error("negative pad");
  if (pad == 0) return *this;
  if (const auto* r = as_int()) return int_range(r->lo + pad, r->hi - pad);
  if (const auto* b = as_boolean())
    return boolean_ball(b->max_len, b->letter_lo + pad, b->letter_hi - pad);
  const auto* f = as_free();
  if (f->max_len - pad < 0) throw precondition_error("pad exceeds ball radius");
  return free_ball(f->max_len - pad);
}

uint64_t default_window_cap() {
  static const uint64_t cap = [] {
    if (const char* env = std::getenv("LARGESET_BUDGET_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
    }
    return static_cast<uint64_t>(1000000);
  }();
  return cap;
}

namespace {

void enumerate_combinations(int64_t lo, int64_t hi, int k, std::vector<int64_t>& cur,
                            std::vector<Element>& out) {
  if (k == 0) {
    out.push_back(Element::word(cur));
    return;
  }
  for (int64_t x = lo; x + k - 1 <= hi; ++x) {
    cur.push_back(x);
    enumerate_combinations(x + 1, hi, k - 1, cur, out);
    cur.pop_back();
  }
}

void enumerate_free_words(int rank, int len, std::vector<int32_t>& cur,
                          std::vector<Element>& out) {
  if (len == 0) {
    out.push_back(Element::free_word(cur));
    return;
  }
  for (int g = 1; g <= rank; ++g) {
    for (int32_t signed_g : {static_cast<int32_t>(g), static_cast<int32_t>(-g)}) {
      if (!cur.empty() && cur.back() == -signed_g) continue;
      cur.push_back(signed_g);
      enumerate_free_words(rank, len - 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Element> enumerate_window(const GroupCtx& ctx, const Window& w, uint64_t cap) {
  if (ctx.family != w.family())
    throw family_error("enumerate_window: window family " + family_name(w.family()) +
                       " does not match context family " + family_name(ctx.family));
  uint64_t n = w.count(ctx);
  if (n > cap)
    throw resource_error("window of size " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(n));
  if (const auto* r = w.as_int()) {
    // spiral order 0, 1, -1, 2, -2, ...: keeps witnesses and search
    // tie-breaks anchored at the identity
    out.push_back(Element::integer(0));
    int64_t reach = std::max(r->hi, -r->lo);
    for (int64_t k = 1; k <= reach; ++k) {
      if (k <= r->hi) out.push_back(Element::integer(k));
      if (-k >= r->lo) out.push_back(Element::integer(-k));
    }
    return out;
  }
  if (const auto* b = w.as_boolean()) {
    std::vector<int64_t> cur;
    for (int k = 0; k <= b->max_len; ++k)
      enumerate_combinations(b->letter_lo, b->letter_hi, k, cur, out);
    return out;
  }
  const auto* f = w.as_free();
  std::vector<int32_t> cur;
  for (int len = 0; len <= f->max_len; ++len)
    enumerate_free_words(ctx.rank, len, cur, out);
  return out;
}

Window window_intersection(const Window& a, const Window& b) {
  if (a.family() != b.family())
    throw family_error("window_intersection across families");
  if (const auto* ra = a.as_int()) {
    const auto* rb = b.as_int();
    return Window::int_range(std::max(ra->lo, rb->lo), std::min(ra->hi, rb->hi));
  }
  if (const auto* ba = a.as_boolean()) {
    const auto* bb = b.as_boolean();
    return Window::boolean_ball(std::min(ba->max_len, bb->max_len),
                                std::max(ba->letter_lo, bb->letter_lo),
                                std::min(ba->letter_hi, bb->letter_hi));
  }
  const auto* fa = a.as_free();
  const auto* fb = b.as_free();
  return Window::free_ball(std::min(fa->max_len, fb->max_len));
}

}  // namespace largeset
