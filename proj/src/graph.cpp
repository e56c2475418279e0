#include "qcn/graph.hpp"

#include "qcn/error.hpp"

namespace qcn {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) return;
  rows_[u].set(v);
  rows_[v].set(u);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(size());
  for (int u = 0; u < size(); ++u) {
    c.rows_[u] = ~rows_[u];
    c.rows_[u].reset(u);
  }
  return c;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  SimpleGraph h(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (adjacent(vertices[a], vertices[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

}  // namespace qcn
