#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcn/mode.hpp"
#include "qcn/system.hpp"

namespace qcn {

/// (alpha, s) MDS generation over uncoded chunks g(i).
struct Generation {
  std::string id;
  std::vector<int> chunks;  // 0-based, sorted
  int decode_threshold = 1;  // s
  int alpha = 0;             // coded chunks placed system-wide
};

struct CodedChunk {
  int id = 0;
  int generation = 0;  // index into CodedLayout::generations()
  int drive = 0;       // physical drive
};

/// Coded placement over the physical drives of a base (uncoded) system.
class CodedLayout {
 public:
  struct DriveContent {
    std::vector<int> uncoded;  // 0-based chunk ids
    std::vector<int> coded;    // coded chunk ids
  };

  /// Throws on replicated coded ids, uncoded replicas of coded chunks,
  /// overlapping generations, or s > alpha.
  CodedLayout(int num_chunks, std::vector<Generation> generations, std::vector<CodedChunk> coded,
              std::vector<std::vector<int>> uncoded_per_drive, bool coefficient_cycling);

  int num_chunks() const { return chunks_; }
  int num_drives() const { return static_cast<int>(drives_.size()); }
  const std::vector<Generation>& generations() const { return generations_; }
  const std::vector<CodedChunk>& coded_chunks() const { return coded_; }
  const CodedChunk& coded_chunk(int id) const;
  const DriveContent& drive(int n) const { return drives_.at(n); }
  bool coefficient_cycling() const { return cycling_; }

  /// Generation of an uncoded chunk, or -1 if it is stored uncoded.
  int generation_of(int chunk) const { return chunk_generation_.at(chunk); }
  /// Coded chunk ids of generation g on physical drive n, ascending.
  std::vector<int> coded_on(int n, int g) const;

 private:
  int chunks_;
  std::vector<Generation> generations_;
  std::vector<CodedChunk> coded_;
  std::vector<DriveContent> drives_;
  std::vector<int> chunk_generation_;
  bool cycling_;
};

/// Layout from a description's [coding] section; uncoded chunks of a drive that
/// belong to a generation are replaced by the drive's coded content.
CodedLayout layout_from_description(const SystemDescription& desc);

/// One generation over all T chunks, s = T, one coded chunk per physical drive.
CodedLayout striped_layout(const StorageSystem& base);

/// Serving link of the link-augmented QCN: chunk l reachable via virtual drive k.
struct Link {
  int chunk;
  int drive;
  friend auto operator<=>(const Link&, const Link&) = default;
};

struct CodedTransform {
  StorageSystem system;
  std::vector<Link> links;  // multiset, sorted
  std::vector<Link> added;  // links minus the base system's links (multiset difference)
};

/// Upper-bound transform: each coded chunk of generation g on D_k gives every
/// flow (f_l, u_j), l in g, a link labelled D_k. Analysis then runs with S = 1.
CodedTransform coded_transform(const StorageSystem& base, const CodedLayout& layout);

struct AchievabilityViolation {
  int drive;
  int generation;
  int stored;
  int required;
};

struct AchievabilityCheck {
  bool achievable = true;
  std::vector<AchievabilityViolation> violations;
};

/// Every touched (drive, generation) stores at least s coded chunks of it.
AchievabilityCheck check_achievable_unicast(const CodedLayout& layout);
/// Every touched (drive, generation) stores at least s + N + 1 coded chunks of it.
AchievabilityCheck check_achievable_any(const CodedLayout& layout, int num_users);

enum class DofMode { UpperBound, Exact };

enum class Receipt { Accepted, Decoded, Rejected };

/// Degrees of freedom per (user, generation).
class DofTracker {
 public:
  DofTracker(const CodedLayout& layout, int num_users);

  int num_users() const { return users_; }
  const CodedLayout& layout() const { return *layout_; }

  /// Exact mode rejects a coded chunk the user already holds; upper-bound mode
  /// (or coefficient cycling) counts every receipt as a fresh degree of freedom.
  Receipt receive(int user, int coded_id, DofMode mode);

  int received(int user, int generation) const { return static_cast<int>(cell(user, generation).held.size()); }
  bool holds(int user, int coded_id) const;
  int remaining(int user, int generation) const;
  bool decoded(int user, int generation) const { return cell(user, generation).decoded; }
  /// Starts a fresh decoding round for the generation.
  void reset(int user, int generation);

 private:
  struct Cell {
    std::vector<int> held;
    bool decoded = false;
  };
  const Cell& cell(int user, int generation) const;
  Cell& cell(int user, int generation);

  const CodedLayout* layout_;
  int users_;
  std::vector<Cell> cells_;
};

/// S(i,j,k) over the transformed system implied by the tracker.
KnowledgeState knowledge_state(const StorageSystem& transformed, const DofTracker& tracker, DofMode mode);

struct CodedDelivery {
  int user;
  int coded_id;
};

/// Applies one coded delivery; throws qcn::Error when exact mode rejects it.
KnowledgeState update_knowledge(const StorageSystem& transformed, DofTracker& tracker, const CodedDelivery& delivery,
                                DofMode mode);

}  // namespace qcn
