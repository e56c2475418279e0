#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace qcn {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Undirected simple graph over vertices 0..n-1 with a dense adjacency matrix.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : rows_(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n))) {}

  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return static_cast<int>(rows_[v].count()); }

  /// Ignores loops; idempotent for parallel edges.
  void add_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;
  SimpleGraph complement() const;
  SimpleGraph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<VertexSet> rows_;
};

}  // namespace qcn
