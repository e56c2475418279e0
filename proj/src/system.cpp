#include "qcn/system.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qcn/error.hpp"

namespace qcn {

namespace {

constexpr std::array kPatterns = {
    TrafficPattern::SingleUnicast,           TrafficPattern::MultipleUnicast,
    TrafficPattern::Broadcast,               TrafficPattern::Multicast,
    TrafficPattern::BroadcastOrSingleUnicast, TrafficPattern::BroadcastOrMultipleUnicast,
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string_view to_string(TrafficPattern p) {
  switch (p) {
    case TrafficPattern::SingleUnicast: return "single_unicast";
    case TrafficPattern::MultipleUnicast: return "multiple_unicast";
    case TrafficPattern::Broadcast: return "broadcast";
    case TrafficPattern::Multicast: return "multicast";
    case TrafficPattern::BroadcastOrSingleUnicast: return "broadcast_or_single_unicast";
    case TrafficPattern::BroadcastOrMultipleUnicast: return "broadcast_or_multiple_unicast";
  }
  return "unknown";
}

TrafficPattern parse_pattern(std::string_view name) {
  for (auto p : kPatterns)
    if (to_string(p) == name) return p;
  throw Error("unknown traffic pattern '" + std::string(name) + "'");
}

std::span<const TrafficPattern> all_patterns() { return kPatterns; }

std::vector<TrafficPattern> member_patterns(TrafficPattern p) {
  switch (p) {
    case TrafficPattern::BroadcastOrSingleUnicast:
      return {TrafficPattern::Broadcast, TrafficPattern::SingleUnicast};
    case TrafficPattern::BroadcastOrMultipleUnicast:
      return {TrafficPattern::Broadcast, TrafficPattern::MultipleUnicast};
    default:
      return {p};
  }
}

StorageSystem::StorageSystem(int num_chunks, int num_users, std::vector<PhysicalDrive> drives,
                             std::vector<int> reception)
    : num_chunks_(num_chunks), num_users_(num_users), physical_(std::move(drives)), reception_(std::move(reception)) {
  if (num_chunks_ < 1) throw Error("system needs at least one chunk");
  if (num_users_ < 1) throw Error("system needs at least one user");
  if (num_users_ > kMaxUsers) throw Error("at most " + std::to_string(kMaxUsers) + " users are supported");
  if (physical_.empty()) throw Error("system needs at least one drive");
  if (reception_.empty()) reception_.assign(num_users_, 1);
  if (static_cast<int>(reception_.size()) != num_users_)
    throw Error("rx lists " + std::to_string(reception_.size()) + " values for " + std::to_string(num_users_) + " users");

  std::vector<bool> covered(num_chunks_, false);
  for (std::size_t n = 0; n < physical_.size(); ++n) {
    auto& d = physical_[n];
    if (d.units < 1) throw Error("drive " + std::to_string(n + 1) + " needs at least one service unit");
    std::sort(d.chunks.begin(), d.chunks.end());
    for (std::size_t c = 0; c < d.chunks.size(); ++c) {
      int i = d.chunks[c];
      if (i < 0 || i >= num_chunks_)
        throw Error("drive " + std::to_string(n + 1) + " stores unknown chunk f" + std::to_string(i + 1));
      if (c > 0 && d.chunks[c - 1] == i)
        throw Error("duplicate chunk f" + std::to_string(i + 1) + " on drive " + std::to_string(n + 1));
      covered[i] = true;
    }
  }
  for (int i = 0; i < num_chunks_; ++i)
    if (!covered[i]) throw Error("uncovered chunk f" + std::to_string(i + 1));

  for (int j = 0; j < num_users_; ++j) {
    int r = reception_[j];
    if (r < 1) throw Error("rx of user u" + std::to_string(j + 1) + " must be positive");
    if (r > 1 && r < num_chunks_)
      throw Error("rx " + std::to_string(r) + " of user u" + std::to_string(j + 1) +
                  " is not edge-based (needs 1 or >= " + std::to_string(num_chunks_) + ")");
  }

  for (std::size_t n = 0; n < physical_.size(); ++n)
    for (int u = 0; u < physical_[n].units; ++u) virtual_.push_back({static_cast<int>(n), u});

  connectivity_.assign(static_cast<std::size_t>(num_chunks_) * virtual_.size(), 0);
  for (std::size_t k = 0; k < virtual_.size(); ++k)
    for (int i : physical_[virtual_[k].physical].chunks) connectivity_[static_cast<std::size_t>(i) * virtual_.size() + k] = 1;
}

StorageSystem StorageSystem::with_reception(std::vector<int> reception) const {
  return StorageSystem(num_chunks_, num_users_, physical_, std::move(reception));
}

StorageSystem StorageSystem::with_uniform_reception(int rx) const {
  return with_reception(std::vector<int>(num_users_, rx));
}

std::string StorageSystem::describe() const {
  std::ostringstream os;
  os << "T=" << num_chunks_ << " N=" << num_users_;
  for (std::size_t n = 0; n < physical_.size(); ++n) {
    os << " D" << n + 1 << "x" << physical_[n].units << ":";
    for (std::size_t c = 0; c < physical_[n].chunks.size(); ++c) os << (c ? "," : "") << "f" << physical_[n].chunks[c] + 1;
  }
  os << " rx=";
  for (std::size_t j = 0; j < reception_.size(); ++j) os << (j ? "," : "") << reception_[j];
  return os.str();
}

std::uint64_t StorageSystem::fingerprint() const { return fnv1a(describe()); }

ConnectivityMatrix::ConnectivityMatrix(const StorageSystem& sys)
    : rows_(sys.num_chunks()), cols_(sys.num_virtual_drives()), cells_(static_cast<std::size_t>(rows_) * cols_, 0) {
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) cells_[static_cast<std::size_t>(i) * cols_ + k] = sys.stores(i, k) ? 1 : 0;
}

StorageSystem build_system(const SystemDescription& config) {
  if (config.num_chunks < 1) throw Error("[system] chunks must be >= 1");
  if (config.num_users < 1) throw Error("[system] users must be >= 1");
  std::vector<PhysicalDrive> drives;
  drives.reserve(config.drives.size());
  for (const auto& d : config.drives) {
    for (int i : d.chunks)
      if (i < 0 || i >= config.num_chunks)
        throw Error("drive " + std::to_string(d.id) + " stores f" + std::to_string(i + 1) + " outside 1.." +
                    std::to_string(config.num_chunks));
    drives.push_back({d.units, d.chunks});
  }
  return StorageSystem(config.num_chunks, config.num_users, std::move(drives), config.reception);
}

}  // namespace qcn
