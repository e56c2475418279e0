#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcn {

inline constexpr int kMaxUsers = 16;

enum class TrafficPattern {
  SingleUnicast,
  MultipleUnicast,
  Broadcast,
  Multicast,
  BroadcastOrSingleUnicast,
  BroadcastOrMultipleUnicast,
};

std::string_view to_string(TrafficPattern p);
TrafficPattern parse_pattern(std::string_view name);
std::span<const TrafficPattern> all_patterns();

/// Member patterns of a composite; a simple pattern is its own sole member.
std::vector<TrafficPattern> member_patterns(TrafficPattern p);

struct PhysicalDrive {
  int units = 1;
  std::vector<int> chunks;  // 0-based, sorted, unique
};

struct VirtualDrive {
  int physical = 0;
  int unit = 0;
};

/// A storage network expanded into its queued cross-bar form. Chunk, user and
/// drive indices are 0-based; text formats render them 1-based.
class StorageSystem {
 public:
  StorageSystem(int num_chunks, int num_users, std::vector<PhysicalDrive> drives, std::vector<int> reception);

  int num_chunks() const { return num_chunks_; }
  int num_users() const { return num_users_; }
  int num_virtual_drives() const { return static_cast<int>(virtual_.size()); }
  int num_flows() const { return num_chunks_ * num_users_; }
  int flow_index(int chunk, int user) const { return chunk * num_users_ + user; }

  const std::vector<PhysicalDrive>& physical_drives() const { return physical_; }
  const VirtualDrive& virtual_drive(int k) const { return virtual_.at(k); }
  const std::vector<int>& chunks_on(int k) const { return physical_[virtual_.at(k).physical].chunks; }

  /// Connectivity N(i,k).
  bool stores(int chunk, int k) const { return connectivity_[static_cast<std::size_t>(chunk) * virtual_.size() + k] != 0; }

  int rx(int user) const { return reception_.at(user); }
  const std::vector<int>& reception() const { return reception_; }
  std::uint32_t all_users() const { return (1u << num_users_) - 1u; }

  StorageSystem with_reception(std::vector<int> reception) const;
  StorageSystem with_uniform_reception(int rx) const;

  /// Stable 64-bit digest of the canonical description.
  std::uint64_t fingerprint() const;
  std::string describe() const;

 private:
  int num_chunks_;
  int num_users_;
  std::vector<PhysicalDrive> physical_;
  std::vector<VirtualDrive> virtual_;
  std::vector<int> reception_;
  std::vector<std::uint8_t> connectivity_;
};

/// T x R chunk-to-virtual-drive incidence.
class ConnectivityMatrix {
 public:
  explicit ConnectivityMatrix(const StorageSystem& sys);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int chunk, int k) const { return cells_[static_cast<std::size_t>(chunk) * cols_ + k]; }

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;
};

// ---- SystemDescription text format ----------------------------------------

struct GenerationSpec {
  std::string id;
  std::vector<int> chunks;  // 0-based
  int decode_threshold = 1;
};

struct CodedPlacementSpec {
  int drive = 0;  // drive id as written in "[drive <n>]"
  std::string generation;
  int count = 1;
};

struct CodingSpec {
  std::vector<GenerationSpec> generations;
  std::vector<CodedPlacementSpec> placements;
  bool coefficient_cycling = false;
};

struct DriveSpec {
  int id = 0;  // label from "[drive <n>]"
  int units = 1;
  std::vector<int> chunks;  // 0-based, in listed order
};

struct SystemDescription {
  int num_users = 0;
  int num_chunks = 0;
  std::vector<DriveSpec> drives;  // sorted by id
  std::optional<TrafficPattern> pattern;
  std::vector<int> reception;  // empty: all ones
  std::optional<CodingSpec> coding;
};

SystemDescription parse_system_description(std::string_view text);
SystemDescription load_system_description(const std::string& path);

/// Validates and expands a description; throws qcn::Error on the first problem.
StorageSystem build_system(const SystemDescription& config);

}  // namespace qcn
