#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcn/conflict_graph.hpp"
#include "qcn/rate_region.hpp"
#include "qcn/stable_sets.hpp"

namespace qcn {

/// phi over the stable-set family; rates over the region's active flows.
struct RateDecomposition {
  std::vector<Rational> phi;
  std::vector<Rational> requested;
  std::vector<Rational> achieved;
  /// Uniform service margin: achieved >= requested + margin on every flow.
  Rational margin = 0;
  std::uint64_t graph_hash = 0;
};

/// Exact LP decomposition maximising the uniform service margin; ties broken by
/// Bland's rule over the canonical stable-set order. Throws when rho is outside.
RateDecomposition decompose_rate(const RateRegion& region, const std::vector<Rational>& rho);

inline constexpr std::int64_t kMaxFrame = 1'000'000;

struct FrameSchedule {
  std::int64_t frame = 0;
  /// Stable-set index (0-based) for each slot of the frame.
  std::vector<int> slots;
  std::uint64_t graph_hash = 0;
  std::size_t family_size = 0;
};

/// F = lcm of the denominators of phi and the achieved rates; set l fills
/// phi_l * F consecutive slots, blocks in ascending l.
FrameSchedule build_frame_schedule(const RateDecomposition& decomposition, std::int64_t cap = kMaxFrame);

/// Stable-set weights under backlog q (flows i-major over all T*N flows).
class MaxWeightPolicy {
 public:
  MaxWeightPolicy(const ConflictGraph& g, const StableSetFamily& family);

  /// Heaviest set (ties to the earliest); nullopt when every weight is zero.
  std::optional<int> select(const std::vector<std::int64_t>& queues) const;
  std::int64_t weight(int set, const std::vector<std::int64_t>& queues) const;

 private:
  std::size_t flows_;
  // flow served by each delivery of each set, with multiplicity
  std::vector<std::vector<int>> served_;
};

std::optional<int> online_maxweight_step(const ConflictGraph& g, const StableSetFamily& family,
                                         const std::vector<std::int64_t>& queues);

/// "t<TAB>set<TAB>i:j:k,..." per slot, all indices 1-based (k = 0 without drives).
std::string export_schedule(const ConflictGraph& g, const StableSetFamily& family, const FrameSchedule& schedule);

}  // namespace qcn
