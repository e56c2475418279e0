#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcn/conflict_graph.hpp"
#include "qcn/graph.hpp"

namespace qcn {

enum class Verdict { No, Yes, Unknown };

std::string_view to_string(Verdict v);

/// Induced K_{1,3}: center first, then three pairwise non-adjacent neighbours.
using Claw = std::array<int, 4>;
/// Triangle (a, b, c) followed by the pendants of a, b and c.
using Net = std::array<int, 6>;

/// First claw in canonical order (center, then neighbour triple lexicographically).
std::optional<Claw> find_claw(const SimpleGraph& g);
bool is_claw(const SimpleGraph& g, const Claw& w);

/// First vertex whose neighbourhood cannot be covered by two cliques.
std::optional<int> find_quasi_line_violation(const SimpleGraph& g);
bool neighbourhood_is_two_cliques(const SimpleGraph& g, int v);

struct PerfectnessOptions {
  int vertex_cap = 64;
  /// Search steps allowed before giving up with Verdict::Unknown.
  std::uint64_t work_budget = 200'000'000;
};

struct PerfectnessResult {
  Verdict perfect = Verdict::Unknown;
  /// Odd hole (in g) or odd antihole (hole of the complement), in cycle order.
  std::vector<int> witness;
  bool antihole = false;
};

/// Strong perfect graph theorem: perfect iff no induced odd cycle of length >= 5
/// in the graph or its complement.
PerfectnessResult check_perfect(const SimpleGraph& g, PerfectnessOptions options = {});
std::optional<std::vector<int>> find_odd_hole(const SimpleGraph& g, std::uint64_t& budget);
bool is_induced_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

std::optional<Net> find_net(const SimpleGraph& g);
bool is_net(const SimpleGraph& g, const Net& w);

/// Size of a maximum independent set.
int stability_number(const SimpleGraph& g);

struct ClassificationReport {
  bool claw_free = true;
  std::optional<Claw> claw;
  bool quasi_line = true;
  std::optional<int> quasi_line_violation;
  Verdict perfect = Verdict::Unknown;
  std::vector<int> odd_hole;
  bool odd_antihole = false;
  std::optional<Net> net;
  int stability_number = 0;
  bool pairwise_exact = true;
};

ClassificationReport classify(const SimpleGraph& g, PerfectnessOptions options = {});
ClassificationReport classify(const ConflictGraph& g, PerfectnessOptions options = {});

/// Re-checks every witness of a report against the graph.
bool certify(const SimpleGraph& g, const ClassificationReport& report);

/// key=value lines; witnesses rendered with vertex labels.
std::string format_report(const ConflictGraph& g, const ClassificationReport& report);

}  // namespace qcn
