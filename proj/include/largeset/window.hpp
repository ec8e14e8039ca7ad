#ifndef LARGESET_WINDOW_HPP
#define LARGESET_WINDOW_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "largeset/element.hpp"

namespace largeset {

struct IntRange {
  int64_t lo = 0;
  int64_t hi = 0;
};

struct BooleanBall {
  int max_len = 0;
  int64_t letter_lo = 0;
  int64_t letter_hi = 0;
};

struct FreeBall {
  int max_len = 0;
};

// A finite enumerable fragment of a group. Every window contains the
// identity (fatness and quotient sets always involve it), enumerates in a
// deterministic canonical order, and is size-capped. Canonical orders:
// IntRange spirals outward from 0 (0, 1, -1, 2, -2, ...); balls go by
// length, then lexicographically.
class Window {
 public:
  static Window int_range(int64_t lo, int64_t hi);
  static Window boolean_ball(int max_len, int64_t letter_lo, int64_t letter_hi);
  static Window free_ball(int max_len);

  // "int:LO:HI" | "bool:MAXLEN:LO:HI" | "free:MAXLEN"
  static Window parse(const std::string& spec);
  std::string str() const;

  Family family() const;
  const IntRange* as_int() const { return std::get_if<IntRange>(&spec_); }
  const BooleanBall* as_boolean() const { return std::get_if<BooleanBall>(&spec_); }
  const FreeBall* as_free() const { return std::get_if<FreeBall>(&spec_); }

  // Closed-form element count, saturating well above any usable cap.
  uint64_t count(const GroupCtx& ctx) const;
  bool contains(const Element& g) const;

  // Inner window for boundary control: IntRange shrinks both endpoints,
  // BooleanBall shrinks the letter range on both sides, FreeBall shrinks
  // the radius.
  Window padded(int pad) const;

 private:
  std::variant<IntRange, BooleanBall, FreeBall> spec_;
};

// Hard cap on window enumeration; LARGESET_BUDGET_CAP overrides the
// 10^6 default. Exceeding the cap is an error, never a truncation.
uint64_t default_window_cap();

std::vector<Element> enumerate_window(const GroupCtx& ctx, const Window& w,
                                      uint64_t cap = default_window_cap());

// Component-wise intersection of two same-family windows.
Window window_intersection(const Window& a, const Window& b);

}  // namespace largeset

#endif
