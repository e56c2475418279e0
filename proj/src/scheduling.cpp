#include "qcn/scheduling.hpp"

#include <sstream>

#include "qcn/error.hpp"
#include "qcn/lp.hpp"

namespace qcn {

RateDecomposition decompose_rate(const RateRegion& region, const std::vector<Rational>& rho_in) {
  auto m = region.membership(rho_in);
  if (!m.inside) throw Error("cannot decompose: " + m.diagnostic);
  std::vector<Rational> rho = region.to_active(rho_in);

  // columns: phi_1..phi_m, t, s_1..s_d
  const int d = region.dim();
  const int sets = static_cast<int>(region.family().size());
  const int cols = sets + 1 + d;
  std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(d + 1, Rational(0));
  const auto& gens = region.generators();
  for (int f = 0; f < d; ++f) {
    for (int l = 0; l < sets; ++l) A[f][l] = gens[l][f];
    A[f][sets] = -1;
    A[f][sets + 1 + f] = -1;
    b[f] = rho[f];
  }
  for (int l = 0; l < sets; ++l) A[d][l] = 1;
  b[d] = 1;
  std::vector<Rational> c(cols, Rational(0));
  c[sets] = -1;
  LpResult lp = solve_lp(A, b, c);
  if (lp.status != LpStatus::Optimal) throw Error("rate decomposition LP failed");

  RateDecomposition out;
  out.phi.assign(lp.x.begin(), lp.x.begin() + sets);
  out.margin = lp.x[sets];
  out.requested = rho;
  out.achieved.assign(d, Rational(0));
  for (int l = 0; l < sets; ++l)
    if (out.phi[l] != 0)
      for (int f = 0; f < d; ++f) out.achieved[f] += out.phi[l] * gens[l][f];
  out.graph_hash = region.graph_hash();
  return out;
}

FrameSchedule build_frame_schedule(const RateDecomposition& dec, std::int64_t cap) {
  std::vector<Rational> all(dec.phi);
  all.insert(all.end(), dec.achieved.begin(), dec.achieved.end());
  BigInt frame = denominator_lcm(all);
  if (frame > cap) throw Error("frame size " + frame.str() + " exceeds cap " + std::to_string(cap));
  FrameSchedule s;
  s.frame = frame.convert_to<std::int64_t>();
  s.graph_hash = dec.graph_hash;
  s.family_size = dec.phi.size();
  for (std::size_t l = 0; l < dec.phi.size(); ++l) {
    Rational count = dec.phi[l] * frame;
    s.slots.insert(s.slots.end(), boost::multiprecision::numerator(count).convert_to<std::size_t>(),
                   static_cast<int>(l));
  }
  if (static_cast<std::int64_t>(s.slots.size()) != s.frame) throw Error("coefficients do not sum to one");
  return s;
}

MaxWeightPolicy::MaxWeightPolicy(const ConflictGraph& g, const StableSetFamily& family)
    : flows_(static_cast<std::size_t>(g.num_chunks()) * g.num_users()) {
  served_.reserve(family.size());
  for (const auto& set : family.sets) {
    std::vector<int> flows;
    for (int v : set) {
      const Vertex& x = g.vertex(v);
      for (int j = 0; j < g.num_users(); ++j)
        if (x.users >> j & 1u) flows.push_back(x.chunk * g.num_users() + j);
    }
    served_.push_back(std::move(flows));
  }
}

std::int64_t MaxWeightPolicy::weight(int set, const std::vector<std::int64_t>& q) const {
  std::int64_t w = 0;
  for (int f : served_.at(set)) w += q[f];
  return w;
}

std::optional<int> MaxWeightPolicy::select(const std::vector<std::int64_t>& q) const {
  if (q.size() != flows_) throw Error("queue vector length does not match flow count");
  std::optional<int> best;
  std::int64_t best_weight = 0;
  for (int l = 0; l < static_cast<int>(served_.size()); ++l) {
    std::int64_t w = weight(l, q);
    if (w > best_weight) {
      best = l;
      best_weight = w;
    }
  }
  return best;
}

std::optional<int> online_maxweight_step(const ConflictGraph& g, const StableSetFamily& family,
                                         const std::vector<std::int64_t>& queues) {
  for (auto q : queues)
    if (q < 0) throw Error("negative queue length");
  return MaxWeightPolicy(g, family).select(queues);
}

std::string export_schedule(const ConflictGraph& g, const StableSetFamily& family, const FrameSchedule& s) {
  if (s.graph_hash != g.hash() || s.family_size != family.size()) throw Error("schedule does not match graph");
  std::ostringstream os;
  for (std::size_t t = 0; t < s.slots.size(); ++t) {
    int l = s.slots[t];
    os << t + 1 << "\t" << l + 1 << "\t";
    bool first = true;
    for (const auto& d : g.deliveries(family.sets.at(l))) {
      os << (first ? "" : ",") << d.chunk + 1 << ":" << d.user + 1 << ":" << d.drive + 1;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qcn
