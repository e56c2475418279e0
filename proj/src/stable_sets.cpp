#include "qcn/stable_sets.hpp"

#include <algorithm>

#include "qcn/error.hpp"

namespace qcn {

std::vector<int> StableSetFamily::incidence(std::size_t l) const {
  std::vector<int> chi(static_cast<std::size_t>(num_vertices), 0);
  for (int v : sets.at(l)) chi[v] = 1;
  return chi;
}

namespace {

struct Enumerator {
  const SimpleGraph& g;
  std::size_t max_sets;
  std::vector<std::vector<int>>& out;
  std::vector<int> current;

  // candidates: vertices > current.back() not adjacent to any chosen vertex
  void run(const VertexSet& candidates) {
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      current.push_back(static_cast<int>(v));
      if (out.size() >= max_sets)
        throw Error("stable-set family exceeds " + std::to_string(max_sets) + " sets");
      out.push_back(current);
      VertexSet next = candidates - g.neighbors(static_cast<int>(v));
      next.reset(v);
      for (auto w = next.find_first(); w != VertexSet::npos && w < v; w = next.find_next(w)) next.reset(w);
      run(next);
      current.pop_back();
    }
  }
};

}  // namespace

StableSetFamily enumerate_stable_sets(const SimpleGraph& g, StableSetOptions options) {
  StableSetFamily family;
  family.num_vertices = g.size();
  VertexSet all(static_cast<std::size_t>(g.size()));
  all.set();
  Enumerator e{g, options.max_sets, family.sets, {}};
  e.run(all);
  std::stable_sort(family.sets.begin(), family.sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return family;
}

FlowIncidence::FlowIncidence(const ConflictGraph& g, const StableSetFamily& family)
    : chunks_(g.num_chunks()), users_(g.num_users()), sets_(family.size()) {
  if (family.num_vertices != g.size()) throw Error("stable-set family does not belong to this graph");
  int drives = 0;
  for (const auto& v : g.vertices()) drives = std::max(drives, v.drive + 1);
  slots_ = g.io() == IoRegime::Infinite ? 1 : std::max(drives, 1);
  per_drive_.assign(static_cast<std::size_t>(chunks_) * slots_ * users_, std::vector<int>(sets_, 0));
  aggregate_.assign(static_cast<std::size_t>(chunks_) * users_, std::vector<int>(sets_, 0));

  std::vector<bool> served(static_cast<std::size_t>(chunks_) * users_, false);
  for (const auto& v : g.vertices())
    for (int j = 0; j < users_; ++j)
      if (v.users >> j & 1u) served[static_cast<std::size_t>(v.chunk) * users_ + j] = true;
  for (int f = 0; f < chunks_ * users_; ++f)
    if (served[f]) active_.push_back(f);

  for (std::size_t l = 0; l < sets_; ++l)
    for (int vi : family.sets[l]) {
      const Vertex& v = g.vertex(vi);
      const int slot = g.io() == IoRegime::Infinite ? 0 : v.drive;
      if (!v.transmits() || slot < 0) continue;
      for (int j = 0; j < users_; ++j)
        if (v.users >> j & 1u) {
          per_drive_[(static_cast<std::size_t>(v.chunk) * slots_ + slot) * users_ + j][l] = 1;
          aggregate_[static_cast<std::size_t>(v.chunk) * users_ + j][l] += 1;
        }
    }
}

}  // namespace qcn
