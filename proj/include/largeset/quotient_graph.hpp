#ifndef LARGESET_QUOTIENT_GRAPH_HPP
#define LARGESET_QUOTIENT_GRAPH_HPP

#include <string>
#include <vector>

#include "largeset/bitgraph.hpp"
#include "largeset/set_spec.hpp"

namespace largeset {

// Graph on the window elements with an edge {x,y} exactly when the pair is
// "good" for A: x^-1 y and y^-1 x both belong to A. In the Boolean family
// this is just x^y in A. m-fatness of A over the window is "no independent
// set of size m".
struct QuotientGraph {
  std::vector<Element> vertices;
  BitGraph graph{0};

  static QuotientGraph build(const SetSpec& A, const Window& w,
                             uint64_t cap = default_window_cap());

  // DIMACS undirected format: comment lines, "p edge N M", one "e u v"
  // line per edge with 1-based vertex ids.
  std::string to_dimacs(const std::vector<std::string>& comments) const;
};

}  // namespace largeset

#endif
