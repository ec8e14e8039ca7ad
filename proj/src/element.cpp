#include "largeset/element.hpp"

#include <algorithm>
#include <sstream>

namespace largeset {

std::string family_name(Family f) {
  switch (f) {
    case Family::integer: return "integer";
    case Family::boolean: return "boolean";
    case Family::free_group: return "free";
  }
  return "?";
}

GroupCtx GroupCtx::free_of_rank(int rank) {
  if (rank < 1) throw precondition_error("free group rank must be >= 1");
  return {Family::free_group, rank};
}

bool operator==(const GroupCtx& a, const GroupCtx& b) {
  if (a.family != b.family) return false;
  if (a.family == Family::free_group) return a.rank == b.rank;
  return true;
}

Element Element::integer(int64_t n) {
  Element e;
  e.family_ = Family::integer;
  e.n_ = n;
  return e;
}

Element Element::word(std::vector<int64_t> letters) {
  std::sort(letters.begin(), letters.end());
  if (std::adjacent_find(letters.begin(), letters.end()) != letters.end())
    throw precondition_error("word has a duplicate letter");
  Element e;
  e.family_ = Family::boolean;
  e.letters_ = std::move(letters);
  return e;
}

Element Element::free_word(std::vector<int32_t> gens) {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] == 0) throw precondition_error("free word has a zero generator id");
    if (i + 1 < gens.size() && gens[i] == -gens[i + 1])
      throw precondition_error("free word is not reduced");
  }
  Element e;
  e.family_ = Family::free_group;
  e.gens_ = std::move(gens);
  return e;
}

Element Element::identity(const GroupCtx& ctx) {
  switch (ctx.family) {
    case Family::integer: return integer(0);
    case Family::boolean: return word({});
    case Family::free_group: return free_word({});
  }
  throw error("unreachable");
}

bool Element::is_identity() const {
  switch (family_) {
    case Family::integer: return n_ == 0;
    case Family::boolean: return letters_.empty();
    case Family::free_group: return gens_.empty();
  }
  return false;
}

int64_t Element::value() const {
  if (family_ != Family::integer)
    throw family_error("value() on a non-integer element");
  return n_;
}

const std::vector<int64_t>& Element::letters() const {
  if (family_ != Family::boolean)
    throw family_error("letters() on a non-boolean element");
  return letters_;
}

const std::vector<int32_t>& Element::gens() const {
  if (family_ != Family::free_group)
    throw family_error("gens() on a non-free element");
  return gens_;
}

namespace {

// a < a^-1 < b < b^-1 < ...
int ord_of_gen(int32_t g) {
  return g > 0 ? 2 * (g - 1) : 2 * (-g - 1) + 1;
}

std::string gen_str(int32_t g) {
  int idx = g > 0 ? g : -g;
  std::string base;
  if (idx <= 26) {
    base = std::string(1, static_cast<char>('a' + idx - 1));
  } else {
    base = "g" + std::to_string(idx);
  }
  return g > 0 ? base : base + "^-1";
}

std::vector<int64_t> sym_diff(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  std::vector<int64_t> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

}  // namespace

std::string Element::str() const {
  switch (family_) {
    case Family::integer:
      return std::to_string(n_);
    case Family::boolean: {
      std::ostringstream os;
      os << '{';
      for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ',';
        if (letters_[i] == star_letter)
          os << '*';
        else
          os << letters_[i];
      }
      os << '}';
      return os.str();
    }
    case Family::free_group: {
      if (gens_.empty()) return "e";
      std::string s;
      for (int32_t g : gens_) s += gen_str(g);
      return s;
    }
  }
  return "?";
}

bool operator==(const Element& a, const Element& b) {
  if (a.family_ != b.family_) return false;
  switch (a.family_) {
    case Family::integer: return a.n_ == b.n_;
    case Family::boolean: return a.letters_ == b.letters_;
    case Family::free_group: return a.gens_ == b.gens_;
  }
  return false;
}

bool operator<(const Element& a, const Element& b) {
  if (a.family_ != b.family_)
    throw family_error("comparing elements of different families");
  switch (a.family_) {
    case Family::integer:
      return a.n_ < b.n_;
    case Family::boolean:
      if (a.letters_.size() != b.letters_.size())
        return a.letters_.size() < b.letters_.size();
      return a.letters_ < b.letters_;
    case Family::free_group: {
      if (a.gens_.size() != b.gens_.size())
        return a.gens_.size() < b.gens_.size();
      for (size_t i = 0; i < a.gens_.size(); ++i) {
        int oa = ord_of_gen(a.gens_[i]), ob = ord_of_gen(b.gens_[i]);
        if (oa != ob) return oa < ob;
      }
      return false;
    }
  }
  return false;
}

Element op(const Element& g, const Element& h) {
  if (g.family() != h.family())
    throw family_error("op: operands from different families (" + family_name(g.family()) +
                       " vs " + family_name(h.family()) + ")");
  switch (g.family()) {
    case Family::integer:
      return Element::integer(g.value() + h.value());
    case Family::boolean:
      // letters are already canonical on both sides; merge keeps them so
      return Element::word(sym_diff(g.letters(), h.letters()));
    case Family::free_group: {
      std::vector<int32_t> out = g.gens();
      for (int32_t x : h.gens()) {
        if (!out.empty() && out.back() == -x)
          out.pop_back();
        else
          out.push_back(x);
      }
      return Element::free_word(std::move(out));
    }
  }
  throw error("unreachable");
}

Element op(const GroupCtx& ctx, const Element& g, const Element& h) {
  require_family(ctx, g, "op");
  require_family(ctx, h, "op");
  return op(g, h);
}

Element inverse(const Element& g) {
  switch (g.family()) {
    case Family::integer:
      return Element::integer(-g.value());
    case Family::boolean:
      return g;  // every element is self-inverse
    case Family::free_group: {
      std::vector<int32_t> out(g.gens().rbegin(), g.gens().rend());
      for (int32_t& x : out) x = -x;
      return Element::free_word(std::move(out));
    }
  }
  throw error("unreachable");
}

Element inverse(const GroupCtx& ctx, const Element& g) {
  require_family(ctx, g, "inverse");
  return inverse(g);
}

size_t word_length(const Element& g) {
  switch (g.family()) {
    case Family::boolean: return g.letters().size();
    case Family::free_group: return g.gens().size();
    case Family::integer: break;
  }
  throw family_error("word_length on an integer element");
}

void require_family(const GroupCtx& ctx, const Element& g, const char* where) {
  if (g.family() != ctx.family)
    throw family_error(std::string(where) + ": element family " + family_name(g.family()) +
                       " does not match context family " + family_name(ctx.family));
  if (ctx.family == Family::free_group) {
    for (int32_t x : g.gens()) {
      int idx = x > 0 ? x : -x;
      if (idx > ctx.rank)
        throw family_error(std::string(where) + ": generator index exceeds rank");
    }
  }
}

}  // namespace largeset
