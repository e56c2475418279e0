#pragma once

#include <optional>

#include "qcn/coded.hpp"
#include "qcn/conflict_graph.hpp"
#include "qcn/system.hpp"

namespace qcn {

struct AnalysisOptions {
  std::optional<TrafficPattern> pattern;  // overrides [traffic] pattern
  IoRegime io = IoRegime::Finite;
  bool coded = false;
  bool do_not_transmit = false;
  int vertex_cap = 4096;
};

/// System, optional coded upper-bound transform and conflict graph for one run.
struct Analysis {
  StorageSystem base;
  std::optional<CodedLayout> layout;
  std::optional<CodedTransform> transform;
  TrafficPattern pattern;
  ConflictGraph graph;

  const StorageSystem& system() const { return transform ? transform->system : base; }
};

Analysis analyze(const SystemDescription& desc, const AnalysisOptions& options);

}  // namespace qcn
