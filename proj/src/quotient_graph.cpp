#include "largeset/quotient_graph.hpp"

#include <sstream>

namespace largeset {

QuotientGraph QuotientGraph::build(const SetSpec& A, const Window& w, uint64_t cap) {
  QuotientGraph q;
  q.vertices = enumerate_window(A.ctx, w, cap);
  int n = static_cast<int>(q.vertices.size());
  q.graph = BitGraph(n);
  const bool boolean = A.ctx.family == Family::boolean;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool edge;
      if (boolean) {
        edge = A.membership(op(q.vertices[i], q.vertices[j]));
      } else {
        Element lq = op(inverse(q.vertices[i]), q.vertices[j]);
        edge = A.membership(lq) && A.membership(inverse(lq));
      }
      if (edge) q.graph.add_edge(i, j);
    }
  }
  return q;
}

std::string QuotientGraph::to_dimacs(const std::vector<std::string>& comments) const {
  std::ostringstream os;
  for (const std::string& c : comments) os << "c " << c << '\n';
  int n = static_cast<int>(vertices.size());
  os << "p edge " << n << ' ' << graph.edge_count() << '\n';
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (graph.has_edge(u, v)) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return os.str();
}

}  // namespace largeset
