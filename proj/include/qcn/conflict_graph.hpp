#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcn/graph.hpp"
#include "qcn/mode.hpp"
#include "qcn/system.hpp"

namespace qcn {

enum class IoRegime { Finite, Infinite };

std::string_view to_string(IoRegime io);
IoRegime parse_io_regime(std::string_view name);

/// v_{f_{i,k},u_S}. `drive` is -1 in the infinite-I/O regime; do-not-transmit
/// vertices carry an empty user set and point at their transmit partner.
struct Vertex {
  int chunk = 0;
  int drive = -1;
  std::uint32_t users = 0;
  int partner = -1;

  bool transmits() const { return users != 0; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct GraphOptions {
  IoRegime io = IoRegime::Finite;
  bool do_not_transmit = false;
  int vertex_cap = 4096;
};

class ConflictGraph {
 public:
  ConflictGraph(std::vector<Vertex> vertices, SimpleGraph graph, TrafficPattern pattern, GraphOptions options,
                std::uint64_t system_fingerprint, int num_chunks, int num_users, bool pairwise_exact);

  const SimpleGraph& graph() const { return graph_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  int size() const { return graph_.size(); }

  TrafficPattern pattern() const { return pattern_; }
  IoRegime io() const { return options_.io; }
  bool has_do_not_transmit() const { return options_.do_not_transmit; }
  std::uint64_t system_fingerprint() const { return system_fingerprint_; }
  int num_chunks() const { return num_chunks_; }
  int num_users() const { return num_users_; }

  /// False when some user has 1 < Rx < (deliveries it could get per slot), in
  /// which case joint infeasibility of three or more vertices is not captured.
  bool pairwise_exact() const { return pairwise_exact_; }

  /// Digest of provenance, vertex list and edge set.
  std::uint64_t hash() const;

  /// "v_<i>_<k>_<mask>", 1-based i and k, k = 0 when the drive is absent;
  /// do-not-transmit vertices render as "d_<i>_<k>_<partner mask>".
  std::string label(int v) const;

  /// Deliveries (chunk, user, drive) activated by a set of vertices.
  std::vector<Delivery> deliveries(const std::vector<int>& vertex_set) const;

 private:
  std::vector<Vertex> vertices_;
  SimpleGraph graph_;
  TrafficPattern pattern_;
  GraphOptions options_;
  std::uint64_t system_fingerprint_;
  int num_chunks_;
  int num_users_;
  bool pairwise_exact_;
};

/// User subsets a pattern admits as vertices, increasing as integers.
std::vector<std::uint32_t> vertex_user_sets(TrafficPattern pattern, int num_users);

ConflictGraph build_conflict_graph(const StorageSystem& sys, TrafficPattern pattern, GraphOptions options = {});

/// One line per vertex: "<label>: <neighbor labels...>".
std::string export_adjacency(const ConflictGraph& g);
/// One line per edge: "<label> <label>".
std::string export_edge_list(const ConflictGraph& g);

}  // namespace qcn
