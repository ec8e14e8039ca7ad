#include "largeset/finite_set.hpp"

#include <algorithm>
#include <sstream>

namespace largeset {

FiniteSet FiniteSet::of(std::vector<Element> elems) {
  for (size_t i = 1; i < elems.size(); ++i)
    if (elems[i].family() != elems[0].family())
      throw family_error("FiniteSet with mixed families");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  FiniteSet s;
  s.elems_ = std::move(elems);
  return s;
}

bool FiniteSet::contains(const Element& g) const {
  if (elems_.empty() || elems_[0].family() != g.family()) return false;
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

std::string FiniteSet::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ", ";
    os << elems_[i].str();
  }
  os << ']';
  return os.str();
}

}  // namespace largeset
