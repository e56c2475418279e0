#include "qcn/conflict_graph.hpp"

#include <sstream>

#include "qcn/error.hpp"

namespace qcn {

std::string_view to_string(IoRegime io) { return io == IoRegime::Finite ? "finite" : "infinite"; }

IoRegime parse_io_regime(std::string_view name) {
  if (name == "finite") return IoRegime::Finite;
  if (name == "infinite") return IoRegime::Infinite;
  throw Error("unknown io regime '" + std::string(name) + "' (expected finite or infinite)");
}

ConflictGraph::ConflictGraph(std::vector<Vertex> vertices, SimpleGraph graph, TrafficPattern pattern,
                             GraphOptions options, std::uint64_t system_fingerprint, int num_chunks, int num_users,
                             bool pairwise_exact)
    : vertices_(std::move(vertices)),
      graph_(std::move(graph)),
      pattern_(pattern),
      options_(options),
      system_fingerprint_(system_fingerprint),
      num_chunks_(num_chunks),
      num_users_(num_users),
      pairwise_exact_(pairwise_exact) {
  if (static_cast<int>(vertices_.size()) != graph_.size()) throw Error("vertex list and graph size differ");
}

std::uint64_t ConflictGraph::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(pattern_));
  mix(static_cast<std::uint64_t>(options_.io));
  mix(options_.do_not_transmit);
  mix(system_fingerprint_);
  for (const auto& v : vertices_) {
    mix(static_cast<std::uint64_t>(v.chunk));
    mix(static_cast<std::uint64_t>(v.drive + 1));
    mix(v.users);
    mix(static_cast<std::uint64_t>(v.partner + 1));
  }
  for (auto [a, b] : graph_.edges()) {
    mix(static_cast<std::uint64_t>(a));
    mix(static_cast<std::uint64_t>(b));
  }
  return h;
}

std::string ConflictGraph::label(int v) const {
  const Vertex& x = vertices_.at(v);
  std::ostringstream os;
  if (x.transmits())
    os << "v_" << x.chunk + 1 << "_" << x.drive + 1 << "_" << x.users;
  else
    os << "d_" << x.chunk + 1 << "_" << x.drive + 1 << "_" << vertices_.at(x.partner).users;
  return os.str();
}

std::vector<Delivery> ConflictGraph::deliveries(const std::vector<int>& vertex_set) const {
  std::vector<Delivery> out;
  for (int v : vertex_set) {
    const Vertex& x = vertices_.at(v);
    for (int j = 0; j < num_users_; ++j)
      if (x.users >> j & 1u) out.push_back({x.chunk, j, x.drive});
  }
  return out;
}

std::vector<std::uint32_t> vertex_user_sets(TrafficPattern pattern, int num_users) {
  const std::uint32_t full = (1u << num_users) - 1u;
  std::vector<bool> allowed(full + 1, false);
  for (auto p : member_patterns(pattern)) {
    switch (p) {
      case TrafficPattern::Multicast:
        for (std::uint32_t s = 1; s <= full; ++s) allowed[s] = true;
        break;
      case TrafficPattern::Broadcast:
        allowed[full] = true;
        break;
      default:  // unicast variants
        for (int j = 0; j < num_users; ++j) allowed[1u << j] = true;
        break;
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s <= full; ++s)
    if (allowed[s]) out.push_back(s);
  return out;
}

ConflictGraph build_conflict_graph(const StorageSystem& sys, TrafficPattern pattern, GraphOptions options) {
  const int T = sys.num_chunks(), N = sys.num_users(), R = sys.num_virtual_drives();
  const auto subsets = vertex_user_sets(pattern, N);
  const bool finite = options.io == IoRegime::Finite;

  std::vector<Vertex> vertices;
  for (int i = 0; i < T; ++i) {
    if (finite) {
      for (int k = 0; k < R; ++k)
        if (sys.stores(i, k))
          for (auto s : subsets) vertices.push_back({i, k, s, -1});
    } else {
      for (auto s : subsets) vertices.push_back({i, -1, s, -1});
    }
  }
  const int transmit_count = static_cast<int>(vertices.size());
  if (options.do_not_transmit)
    for (int v = 0; v < transmit_count; ++v) vertices.push_back({vertices[v].chunk, vertices[v].drive, 0u, v});
  if (static_cast<int>(vertices.size()) > options.vertex_cap)
    throw Error("conflict graph needs " + std::to_string(vertices.size()) + " vertices (cap " +
                std::to_string(options.vertex_cap) + ")");

  // infinite I/O: a chunk is read from its first storing drive, reads unconstrained
  std::vector<int> first_drive(T, -1);
  for (int i = 0; i < T; ++i)
    for (int k = 0; k < R && first_drive[i] < 0; ++k)
      if (sys.stores(i, k)) first_drive[i] = k;

  const KnowledgeState knowledge = KnowledgeState::all_stored(sys);
  ValidationOptions vopts;
  vopts.enforce_drive_reads = finite;

  SimpleGraph g(static_cast<int>(vertices.size()));
  Mode mode = Mode::empty(sys);
  auto place = [&](const Vertex& x, bool on) {
    int k = finite ? x.drive : first_drive[x.chunk];
    for (int j = 0; j < N; ++j)
      if (x.users >> j & 1u) mode.set(x.chunk, j, k, on);
  };
  for (int a = 0; a < transmit_count; ++a) {
    for (int b = a + 1; b < transmit_count; ++b) {
      const Vertex& va = vertices[a];
      const Vertex& vb = vertices[b];
      // states of the same hyperedge are mutually exclusive
      if (va.chunk == vb.chunk && va.drive == vb.drive) {
        g.add_edge(a, b);
        continue;
      }
      place(va, true);
      place(vb, true);
      if (!validate_mode(sys, knowledge, mode, pattern, vopts).valid) g.add_edge(a, b);
      place(va, false);
      place(vb, false);
    }
  }
  for (int v = transmit_count; v < static_cast<int>(vertices.size()); ++v) g.add_edge(v, vertices[v].partner);

  const int max_deliveries = finite ? R : T;
  bool exact = true;
  for (int j = 0; j < N; ++j)
    if (sys.rx(j) != 1 && sys.rx(j) < max_deliveries) exact = false;

  return ConflictGraph(std::move(vertices), std::move(g), pattern, options, sys.fingerprint(), T, N, exact);
}

std::string export_adjacency(const ConflictGraph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.size(); ++v) {
    os << g.label(v) << ":";
    const auto& row = g.graph().neighbors(v);
    for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) os << " " << g.label(static_cast<int>(w));
    os << "\n";
  }
  return os.str();
}

std::string export_edge_list(const ConflictGraph& g) {
  std::ostringstream os;
  for (auto [a, b] : g.graph().edges()) os << g.label(a) << " " << g.label(b) << "\n";
  return os.str();
}

}  // namespace qcn
