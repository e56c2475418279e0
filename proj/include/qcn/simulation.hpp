#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcn/coded.hpp"
#include "qcn/conflict_graph.hpp"
#include "qcn/rational.hpp"
#include "qcn/scheduling.hpp"
#include "qcn/stable_sets.hpp"

namespace qcn {

/// Counter-based SplitMix64: draw n is mix(seed + (n + 1) * 0x9E3779B97F4A7C15),
/// mapped to [0, 1) from its top 53 bits.
struct CounterRng {
  std::uint64_t seed = 0;
  static std::uint64_t mix(std::uint64_t z);
  std::uint64_t bits(std::uint64_t n) const;
  double uniform(std::uint64_t n) const;
};

inline constexpr int kMaxArrivalRate = 64;

/// Per-flow i.i.d. arrivals: floor(r) + Bernoulli(r - floor(r)) requests per slot.
/// Flow f in slot t uses draw t * flows + f.
class ArrivalProcess {
 public:
  ArrivalProcess(std::vector<Rational> rates, std::uint64_t seed);

  std::size_t num_flows() const { return whole_.size(); }
  const std::vector<Rational>& rates() const { return rates_; }
  std::uint64_t seed() const { return rng_.seed; }
  int arrivals(std::int64_t t, std::size_t flow) const;

 private:
  std::vector<Rational> rates_;
  std::vector<int> whole_;
  std::vector<double> fraction_;
  CounterRng rng_;
};

class Policy {
 public:
  enum class Kind { Frame, Online };

  static Policy frame(FrameSchedule schedule);
  static Policy online();

  Kind kind() const { return kind_; }
  const FrameSchedule& schedule() const { return schedule_; }

 private:
  Kind kind_ = Kind::Online;
  FrameSchedule schedule_;
};

/// Degrees-of-freedom bookkeeping for simulating a coded system; `transformed`
/// must be the system the conflict graph was built from.
struct CodedContext {
  const StorageSystem* transformed = nullptr;
  const CodedLayout* layout = nullptr;
  DofMode mode = DofMode::Exact;
};

struct SimulationTrace {
  std::int64_t horizon = 0;
  std::vector<std::int64_t> backlog;  // total backlog after slot t
  std::vector<std::int64_t> arrived;  // per flow
  std::vector<std::int64_t> served;   // per flow
  std::vector<std::int64_t> final_queues;
  std::int64_t rejected = 0;  // coded deliveries refused by the tracker
};

/// Each slot: arrivals, then one stable set's deliveries; deliveries to empty
/// queues are no-ops.
SimulationTrace simulate(const ConflictGraph& g, const StableSetFamily& family, const Policy& policy,
                         const ArrivalProcess& arrivals, std::int64_t horizon,
                         const std::optional<CodedContext>& coded = std::nullopt);

inline constexpr std::int64_t kMinVerdictHorizon = 10'000;

struct StabilityVerdict {
  bool stable = true;
  double slope = 0;
  std::int64_t max_backlog = 0;
};

/// Least-squares slope of total backlog over the second half of the horizon;
/// stable iff slope < 0.01 and max backlog < 0.01 * H.
StabilityVerdict stability_verdict(const SimulationTrace& trace);

/// "t<TAB>total_backlog" per slot (t from 1).
std::string export_trace(const SimulationTrace& trace);
/// "verdict<TAB>slope<TAB>max_backlog".
std::string format_verdict(const StabilityVerdict& v);

}  // namespace qcn
