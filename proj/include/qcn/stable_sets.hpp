#pragma once

#include <cstddef>
#include <vector>

#include "qcn/conflict_graph.hpp"
#include "qcn/graph.hpp"

namespace qcn {

/// All nonempty stable sets S^1..S^m, ordered by size and then lexicographically
/// over ascending vertex indices.
struct StableSetFamily {
  int num_vertices = 0;
  std::vector<std::vector<int>> sets;

  std::size_t size() const { return sets.size(); }
  /// χ^{S_l} over the vertex list.
  std::vector<int> incidence(std::size_t l) const;
};

struct StableSetOptions {
  std::size_t max_sets = std::size_t{1} << 20;
};

StableSetFamily enumerate_stable_sets(const SimpleGraph& g, StableSetOptions options = {});

/// C^{i,k,j} and C^{i,j} over a stable-set family. Flows are indexed i-major,
/// j-minor; in the infinite-I/O regime the drive axis has a single slot.
class FlowIncidence {
 public:
  FlowIncidence(const ConflictGraph& g, const StableSetFamily& family);

  int num_chunks() const { return chunks_; }
  int num_users() const { return users_; }
  int drive_slots() const { return slots_; }
  std::size_t num_sets() const { return sets_; }

  const std::vector<int>& per_drive(int chunk, int drive, int user) const {
    return per_drive_.at((static_cast<std::size_t>(chunk) * slots_ + drive) * users_ + user);
  }
  const std::vector<int>& aggregate(int chunk, int user) const {
    return aggregate_.at(static_cast<std::size_t>(chunk) * users_ + user);
  }

  /// Flow indices i*N+j with at least one serving vertex, ascending.
  const std::vector<int>& active_flows() const { return active_; }

 private:
  int chunks_, users_, slots_;
  std::size_t sets_;
  std::vector<std::vector<int>> per_drive_;
  std::vector<std::vector<int>> aggregate_;
  std::vector<int> active_;
};

inline FlowIncidence flow_incidence(const ConflictGraph& g, const StableSetFamily& family) {
  return FlowIncidence(g, family);
}

}  // namespace qcn
