#include "qcn/simulation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "qcn/error.hpp"

namespace qcn {

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t n) const { return mix(seed + (n + 1) * 0x9E3779B97F4A7C15ull); }

double CounterRng::uniform(std::uint64_t n) const { return static_cast<double>(bits(n) >> 11) * 0x1.0p-53; }

ArrivalProcess::ArrivalProcess(std::vector<Rational> rates, std::uint64_t seed) : rates_(std::move(rates)), rng_{seed} {
  for (const auto& r : rates_) {
    if (r < 0 || r > kMaxArrivalRate)
      throw Error("arrival rate " + to_string(r) + " outside [0, " + std::to_string(kMaxArrivalRate) + "]");
    BigInt floor = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
    whole_.push_back(floor.convert_to<int>());
    fraction_.push_back(to_double(Rational(r - Rational(floor))));
  }
}

int ArrivalProcess::arrivals(std::int64_t t, std::size_t flow) const {
  int a = whole_[flow];
  if (fraction_[flow] > 0 && rng_.uniform(static_cast<std::uint64_t>(t) * whole_.size() + flow) < fraction_[flow]) ++a;
  return a;
}

Policy Policy::frame(FrameSchedule schedule) {
  if (schedule.slots.empty()) throw Error("empty frame schedule");
  Policy p;
  p.kind_ = Kind::Frame;
  p.schedule_ = std::move(schedule);
  return p;
}

Policy Policy::online() { return Policy{}; }

SimulationTrace simulate(const ConflictGraph& g, const StableSetFamily& family, const Policy& policy,
                         const ArrivalProcess& arrivals, std::int64_t horizon, const std::optional<CodedContext>& coded) {
  if (horizon < 1) throw Error("horizon must be at least 1");
  const std::size_t flows = static_cast<std::size_t>(g.num_chunks()) * g.num_users();
  if (arrivals.num_flows() != flows)
    throw Error("arrival process has " + std::to_string(arrivals.num_flows()) + " flows; graph has " +
                std::to_string(flows));
  if (family.num_vertices != g.size()) throw Error("stable-set family does not belong to the graph");
  if (policy.kind() == Policy::Kind::Frame &&
      (policy.schedule().graph_hash != g.hash() || policy.schedule().family_size != family.size()))
    throw Error("frame schedule was built for a different conflict graph");

  std::optional<DofTracker> tracker;
  if (coded) {
    if (!coded->transformed || !coded->layout) throw Error("incomplete coded simulation context");
    if (coded->transformed->fingerprint() != g.system_fingerprint())
      throw Error("coded context does not match the conflict graph's system");
    if (g.io() != IoRegime::Finite) throw Error("coded simulation needs the finite-I/O graph");
    tracker.emplace(*coded->layout, g.num_users());
  }

  // per set: (flow, vertex) for each delivery
  std::vector<std::vector<std::pair<int, int>>> deliveries(family.size());
  for (std::size_t l = 0; l < family.size(); ++l)
    for (int v : family.sets[l]) {
      const Vertex& x = g.vertex(v);
      for (int j = 0; j < g.num_users(); ++j)
        if (x.users >> j & 1u) deliveries[l].push_back({x.chunk * g.num_users() + j, v});
    }
  std::optional<MaxWeightPolicy> online;
  if (policy.kind() == Policy::Kind::Online) online.emplace(g, family);

  SimulationTrace trace;
  trace.horizon = horizon;
  trace.backlog.reserve(static_cast<std::size_t>(horizon));
  trace.arrived.assign(flows, 0);
  trace.served.assign(flows, 0);
  std::vector<std::int64_t> q(flows, 0);
  std::int64_t total = 0;

  for (std::int64_t t = 0; t < horizon; ++t) {
    for (std::size_t f = 0; f < flows; ++f) {
      int a = arrivals.arrivals(t, f);
      q[f] += a;
      trace.arrived[f] += a;
      total += a;
    }
    std::optional<int> set;
    if (online)
      set = online->select(q);
    else
      set = policy.schedule().slots[static_cast<std::size_t>(t % policy.schedule().frame)];
    if (set) {
      for (auto [f, v] : deliveries[*set]) {
        if (q[f] == 0) continue;
        if (tracker) {
          const Vertex& x = g.vertex(v);
          const int user = f % g.num_users();
          const int gen = coded->layout->generation_of(x.chunk);
          const int n = coded->transformed->virtual_drive(x.drive).physical;
          auto ids = gen >= 0 ? coded->layout->coded_on(n, gen) : std::vector<int>{};
          if (!ids.empty()) {
            auto pick = std::find_if(ids.begin(), ids.end(), [&](int id) { return !tracker->holds(user, id); });
            int id = pick != ids.end() ? *pick : ids.front();
            Receipt r = tracker->receive(user, id, coded->mode);
            if (r == Receipt::Rejected) {
              ++trace.rejected;
              continue;
            }
            if (r == Receipt::Decoded) tracker->reset(user, gen);
          }
        }
        --q[f];
        ++trace.served[f];
        --total;
      }
    }
    trace.backlog.push_back(total);
  }
  trace.final_queues = q;
  return trace;
}

StabilityVerdict stability_verdict(const SimulationTrace& trace) {
  if (trace.horizon < kMinVerdictHorizon)
    throw Error("stability verdict needs a horizon of at least " + std::to_string(kMinVerdictHorizon) + " slots");
  StabilityVerdict v;
  v.max_backlog = trace.backlog.empty() ? 0 : *std::max_element(trace.backlog.begin(), trace.backlog.end());
  const std::size_t start = trace.backlog.size() / 2;
  const double n = static_cast<double>(trace.backlog.size() - start);
  double mean_t = 0, mean_y = 0;
  for (std::size_t t = start; t < trace.backlog.size(); ++t) {
    mean_t += static_cast<double>(t);
    mean_y += static_cast<double>(trace.backlog[t]);
  }
  mean_t /= n;
  mean_y /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t t = start; t < trace.backlog.size(); ++t) {
    double dt = static_cast<double>(t) - mean_t;
    sxy += dt * (static_cast<double>(trace.backlog[t]) - mean_y);
    sxx += dt * dt;
  }
  v.slope = sxx > 0 ? sxy / sxx : 0.0;
  v.stable = v.slope < 0.01 && static_cast<double>(v.max_backlog) < 0.01 * static_cast<double>(trace.horizon);
  return v;
}

std::string export_trace(const SimulationTrace& trace) {
  std::string out;
  out.reserve(trace.backlog.size() * 10);
  for (std::size_t t = 0; t < trace.backlog.size(); ++t)
    out += std::to_string(t + 1) + "\t" + std::to_string(trace.backlog[t]) + "\n";
  return out;
}

std::string format_verdict(const StabilityVerdict& v) {
  char slope[32];
  std::snprintf(slope, sizeof slope, "%.6f", v.slope);
  return std::string(v.stable ? "stable" : "unstable") + "\t" + slope + "\t" + std::to_string(v.max_backlog);
}

}  // namespace qcn
