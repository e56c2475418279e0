#pragma once

#include <random>
#include <string>
#include <vector>

#include "qcn/conflict_graph.hpp"
#include "qcn/system.hpp"

namespace qcn::test {

/// Drives given as 1-based chunk lists, one service unit each unless `units` says otherwise.
inline StorageSystem make_system(int chunks, int users, const std::vector<std::vector<int>>& drives,
                                 std::vector<int> rx = {}, std::vector<int> units = {}) {
  std::vector<PhysicalDrive> pd;
  for (std::size_t n = 0; n < drives.size(); ++n) {
    PhysicalDrive d;
    d.units = n < units.size() ? units[n] : 1;
    for (int i : drives[n]) d.chunks.push_back(i - 1);
    pd.push_back(d);
  }
  return StorageSystem(chunks, users, pd, std::move(rx));
}

inline std::string config_path(const std::string& name) { return std::string(QCN_CONFIG_DIR) + "/" + name; }

/// Index of the vertex with 1-based chunk/drive and user mask; -1 if absent.
inline int find_vertex(const ConflictGraph& g, int chunk, int drive, std::uint32_t users) {
  for (int v = 0; v < g.size(); ++v) {
    const auto& x = g.vertex(v);
    if (x.chunk == chunk - 1 && x.drive == drive - 1 && x.users == users) return v;
  }
  return -1;
}

/// Random edge-based system: every chunk covered, Rx drawn from {1, max(T, R)}.
inline StorageSystem random_system(std::mt19937_64& rng, int max_chunks, int max_users, int max_drives,
                                   int max_units = 1) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int T = pick(1, max_chunks);
  const int N = pick(1, max_users);
  const int D = pick(1, max_drives);
  std::vector<PhysicalDrive> drives(D);
  for (auto& d : drives) {
    d.units = pick(1, max_units);
    for (int i = 0; i < T; ++i)
      if (pick(0, 1)) d.chunks.push_back(i);
  }
  for (int i = 0; i < T; ++i) {
    bool covered = false;
    for (const auto& d : drives)
      for (int c : d.chunks) covered |= c == i;
    if (!covered) drives[pick(0, D - 1)].chunks.push_back(i);
  }
  int R = 0;
  for (const auto& d : drives) R += d.units;
  std::vector<int> rx(N);
  for (auto& r : rx) r = pick(0, 1) ? 1 : std::max(T, R);
  return StorageSystem(T, N, drives, rx);
}

}  // namespace qcn::test
