#include "qcn/pipeline.hpp"

#include "qcn/error.hpp"
#include "qcn/report.hpp"

namespace qcn {

namespace {

TrafficPattern pick_pattern(const SystemDescription& desc, const AnalysisOptions& options) {
  if (options.pattern) return *options.pattern;
  if (desc.pattern) return *desc.pattern;
  throw Error("no traffic pattern: set [traffic] pattern or pass --pattern");
}

}  // namespace

Analysis analyze(const SystemDescription& desc, const AnalysisOptions& options) {
  StorageSystem base = build_system(desc);
  TrafficPattern pattern = pick_pattern(desc, options);
  std::optional<CodedLayout> layout;
  std::optional<CodedTransform> transform;
  if (options.coded) {
    layout.emplace(coded_layout_for(desc, base));
    transform.emplace(coded_transform(base, *layout));
  }
  GraphOptions g;
  g.io = options.io;
  g.do_not_transmit = options.do_not_transmit;
  g.vertex_cap = options.vertex_cap;
  const StorageSystem& sys = transform ? transform->system : base;
  ConflictGraph graph = build_conflict_graph(sys, pattern, g);
  return Analysis{std::move(base), std::move(layout), std::move(transform), pattern, std::move(graph)};
}

}  // namespace qcn
