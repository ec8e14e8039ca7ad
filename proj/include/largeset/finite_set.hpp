#ifndef LARGESET_FINITE_SET_HPP
#define LARGESET_FINITE_SET_HPP

#include <vector>

#include "largeset/element.hpp"

namespace largeset {

// A duplicate-free list of elements of one family, kept in canonical order.
class FiniteSet {
 public:
  FiniteSet() = default;

  // Sorts, deduplicates, and checks that all elements share one family.
  static FiniteSet of(std::vector<Element> elems);

  const std::vector<Element>& elements() const { return elems_; }
  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Element& operator[](size_t i) const { return elems_[i]; }

  bool contains(const Element& g) const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    return a.elems_ == b.elems_;
  }

  std::string str() const;

 private:
  std::vector<Element> elems_;
};

}  // namespace largeset

#endif
