#include "qcn/rate_region.hpp"

#include <algorithm>
#include <sstream>

#include "qcn/error.hpp"
#include "qcn/lp.hpp"

namespace qcn {

RateRegion::RateRegion(const ConflictGraph& g, RegionOptions options)
    : chunks_(g.num_chunks()),
      users_(g.num_users()),
      graph_hash_(g.hash()),
      family_(enumerate_stable_sets(g.graph(), options.stable_sets)),
      max_volume_dim_(options.max_volume_dim) {
  incidence_ = std::make_unique<FlowIncidence>(g, family_);
  flows_ = incidence_->active_flows();
  generators_.reserve(family_.size());
  for (std::size_t l = 0; l < family_.size(); ++l) {
    IntPoint p;
    for (int f : flows_) p.push_back(incidence_->aggregate(f / users_, f % users_)[l]);
    generators_.push_back(std::move(p));
  }
  if (dim() <= max_volume_dim_) {
    std::vector<IntPoint> pts = generators_;
    pts.emplace_back(dim(), 0);
    polytope_ = Polytope::hull(dim(), std::move(pts));
  }
}

const Polytope& RateRegion::polytope() const {
  if (!polytope_)
    throw Error("rate region has dimension " + std::to_string(dim()) + "; exact hull limited to " +
                std::to_string(max_volume_dim_));
  return *polytope_;
}

std::string RateRegion::flow_name(int f) const {
  return "r_" + std::to_string(f / users_ + 1) + "_" + std::to_string(f % users_ + 1);
}

std::vector<Rational> RateRegion::to_active(const std::vector<Rational>& rho) const {
  const std::size_t all = static_cast<std::size_t>(chunks_) * users_;
  if (rho.size() == flows_.size()) return rho;
  if (rho.size() != all)
    throw Error("rate vector has " + std::to_string(rho.size()) + " entries; expected " +
                std::to_string(flows_.size()) + " active flows or " + std::to_string(all) + " flows");
  std::vector<bool> active(all, false);
  for (int f : flows_) active[f] = true;
  std::vector<Rational> out;
  for (std::size_t f = 0; f < all; ++f) {
    if (active[f])
      out.push_back(rho[f]);
    else if (rho[f] != 0)
      throw Error("flow " + flow_name(static_cast<int>(f)) + " has no serving vertex but nonzero rate");
  }
  return out;
}

std::vector<Rational> RateRegion::to_all_flows(const std::vector<Rational>& active) const {
  std::vector<Rational> out(static_cast<std::size_t>(chunks_) * users_, Rational(0));
  for (std::size_t t = 0; t < flows_.size(); ++t) out[flows_[t]] = active.at(t);
  return out;
}

Membership RateRegion::membership(const std::vector<Rational>& rho_in) const {
  Membership m;
  std::vector<Rational> rho;
  try {
    rho = to_active(rho_in);
  } catch (const Error& e) {
    m.diagnostic = e.what();
    return m;
  }
  for (std::size_t f = 0; f < rho.size(); ++f)
    if (rho[f] < 0) {
      m.diagnostic = "negative rate for " + flow_name(flows_[f]);
      return m;
    }
  const int d = dim();
  const int sets = static_cast<int>(family_.size());
  std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(sets + d, Rational(0)));
  std::vector<Rational> b(d + 1, Rational(0));
  for (int f = 0; f < d; ++f) {
    for (int l = 0; l < sets; ++l) A[f][l] = generators_[l][f];
    A[f][sets + f] = -1;
    b[f] = rho[f];
  }
  for (int l = 0; l < sets; ++l) A[d][l] = 1;
  b[d] = 1;
  m.inside = sets > 0 ? lp_feasible(A, b) : std::all_of(rho.begin(), rho.end(), [](auto& x) { return x == 0; });
  if (!m.inside) m.diagnostic = "rate vector lies outside the rate region";
  return m;
}

std::string export_region(const RateRegion& region) {
  const Polytope& p = region.polytope();
  std::vector<std::string> names;
  for (int f : region.flows()) names.push_back(region.flow_name(f));
  std::ostringstream os;
  os << "flows";
  for (int f : region.flows()) os << " " << region.flow_name(f);
  os << "\n";
  os << "dimension " << region.dim() << "\n";
  os << "stable_sets " << region.family().size() << "\n";
  os << "vertices " << p.vertices().size() << "\n";
  for (const auto& v : p.vertices()) {
    for (std::size_t c = 0; c < v.size(); ++c) os << (c ? " " : "") << v[c];
    os << "\n";
  }
  os << "inequalities " << p.facets().size() << "\n";
  for (const auto& h : p.facets()) os << format_hyperplane(h, "<=", names) << "\n";
  os << "equalities " << p.equalities().size() << "\n";
  for (const auto& h : p.equalities()) os << format_hyperplane(h, "=", names) << "\n";
  os << "volume " << to_string(p.volume()) << " " << to_decimal(p.volume(), 4) << "\n";
  return os.str();
}

}  // namespace qcn
