#ifndef LARGESET_ELEMENT_HPP
#define LARGESET_ELEMENT_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "largeset/errors.hpp"

namespace largeset {

enum class Family : uint8_t { integer, boolean, free_group };

std::string family_name(Family f);

// One of the three concrete group families: (Z,+), the free Boolean group
// on integer letters under symmetric difference, or a free group of small
// rank under reduced concatenation.
struct GroupCtx {
  Family family = Family::integer;
  int rank = 2;  // free_group only

  static GroupCtx integers() { return {Family::integer, 0}; }
  static GroupCtx booleans() { return {Family::boolean, 0}; }
  static GroupCtx free_of_rank(int rank);
};

bool operator==(const GroupCtx& a, const GroupCtx& b);

// Reserved letter standing for the distinguished point of a filter space.
// It lies outside every window letter range and cancels in pairs like any
// other letter.
inline constexpr int64_t star_letter = std::numeric_limits<int64_t>::max();

// A group element, tagged by family:
//   integer    — an int64 value
//   boolean    — a word: strictly increasing list of integer letters
//                (the canonical form of a finite subset of Z)
//   free_group — a freely reduced generator string; +g / -g encode the
//                g-th generator and its inverse, g >= 1
class Element {
 public:
  Element() : family_(Family::integer), n_(0) {}

  static Element integer(int64_t n);
  // Letters may arrive in any order but must be distinct.
  static Element word(std::vector<int64_t> letters);
  // The generator string must already be reduced.
  static Element free_word(std::vector<int32_t> gens);
  static Element identity(const GroupCtx& ctx);

  Family family() const { return family_; }
  bool is_identity() const;

  int64_t value() const;
  const std::vector<int64_t>& letters() const;
  const std::vector<int32_t>& gens() const;

  // Display form: integers in decimal, words as sorted brace lists
  // ("{1,2}", "{}"; the star letter prints "*"), free words as juxtaposed
  // generators with ^-1 markers ("ab^-1a", identity "e").
  std::string str() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  // Canonical order within one family: integers by value; words and free
  // words by length, then lexicographically (generator order a < a^-1 < b
  // < b^-1 < ...). Comparing across families throws.
  friend bool operator<(const Element& a, const Element& b);

 private:
  Family family_;
  int64_t n_ = 0;
  std::vector<int64_t> letters_;
  std::vector<int32_t> gens_;
};

// Group operation and inverse. The ctx overloads also validate family
// membership (and generator range for free words).
Element op(const Element& g, const Element& h);
Element op(const GroupCtx& ctx, const Element& g, const Element& h);
Element inverse(const Element& g);
Element inverse(const GroupCtx& ctx, const Element& g);

// Word length: cardinality for Boolean words, reduced length for free
// words. Integer input is a family error.
size_t word_length(const Element& g);

void require_family(const GroupCtx& ctx, const Element& g, const char* where);

}  // namespace largeset

#endif
