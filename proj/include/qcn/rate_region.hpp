#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcn/conflict_graph.hpp"
#include "qcn/polytope.hpp"
#include "qcn/rational.hpp"
#include "qcn/stable_sets.hpp"

namespace qcn {

struct RegionOptions {
  /// Largest dimension for which the exact hull and volume are computed.
  int max_volume_dim = 8;
  StableSetOptions stable_sets;
};

struct Membership {
  bool inside = false;
  std::string diagnostic;
};

/// Rate region of a conflict graph over its active flows. Generator g_l is the
/// aggregated incidence C^{i,j}(l) of stable set l. The exact polytope is
/// conv({g_l} U {0}); membership and decomposition use its down-closure.
class RateRegion {
 public:
  explicit RateRegion(const ConflictGraph& g, RegionOptions options = {});

  int num_chunks() const { return chunks_; }
  int num_users() const { return users_; }
  /// Ambient dimension d (number of active flows).
  int dim() const { return static_cast<int>(flows_.size()); }
  /// Active flow indices i*N+j, ascending.
  const std::vector<int>& flows() const { return flows_; }
  std::string flow_name(int f) const;

  const StableSetFamily& family() const { return family_; }
  const FlowIncidence& incidence() const { return *incidence_; }
  /// One generator per stable set, in family order, over the active flows.
  const std::vector<IntPoint>& generators() const { return generators_; }

  bool has_polytope() const { return polytope_.has_value(); }
  /// Throws when d exceeds the volume cap.
  const Polytope& polytope() const;
  const Rational& volume() const { return polytope().volume(); }

  std::uint64_t graph_hash() const { return graph_hash_; }

  /// Accepts either d active-flow rates or all T*N flow rates (inactive ones must be 0).
  std::vector<Rational> to_active(const std::vector<Rational>& rho) const;
  std::vector<Rational> to_all_flows(const std::vector<Rational>& active) const;

  /// Exact LP: rho <= sum phi_l g_l, sum phi_l = 1, phi >= 0. Boundary counts as inside.
  Membership membership(const std::vector<Rational>& rho) const;
  bool contains(const std::vector<Rational>& rho) const { return membership(rho).inside; }

 private:
  int chunks_, users_;
  std::uint64_t graph_hash_;
  std::vector<int> flows_;
  StableSetFamily family_;
  std::unique_ptr<FlowIncidence> incidence_;
  std::vector<IntPoint> generators_;
  std::optional<Polytope> polytope_;
  int max_volume_dim_;
};

/// V-representation, H-representation and volume as plain text.
std::string export_region(const RateRegion& region);

}  // namespace qcn
