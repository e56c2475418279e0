#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qcn/system.hpp"

namespace qcn {

/// Dense 0/1 tensor over chunk x user x virtual drive.
class DeliveryTensor {
 public:
  DeliveryTensor() = default;
  DeliveryTensor(int chunks, int users, int drives, std::uint8_t fill = 0)
      : chunks_(chunks), users_(users), drives_(drives),
        cells_(static_cast<std::size_t>(chunks) * users * drives, fill) {}

  int chunks() const { return chunks_; }
  int users() const { return users_; }
  int drives() const { return drives_; }

  bool get(int i, int j, int k) const { return cells_[index(i, j, k)] != 0; }
  void set(int i, int j, int k, bool on = true) { cells_[index(i, j, k)] = on ? 1 : 0; }

  bool same_shape(const StorageSystem& sys) const {
    return chunks_ == sys.num_chunks() && users_ == sys.num_users() && drives_ == sys.num_virtual_drives();
  }

  friend bool operator==(const DeliveryTensor&, const DeliveryTensor&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * users_ + j) * drives_ + k;
  }
  int chunks_ = 0;
  int users_ = 0;
  int drives_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// S(i,j,k): chunk i on drive k would be innovative for user j.
class KnowledgeState : public DeliveryTensor {
 public:
  using DeliveryTensor::DeliveryTensor;
  /// Knowledge-independent structural state: S(i,j,k) = N(i,k).
  static KnowledgeState all_stored(const StorageSystem& sys);
};

struct Delivery {
  int chunk;
  int user;
  int drive;
  friend auto operator<=>(const Delivery&, const Delivery&) = default;
};

/// M(i,j,k): user j receives chunk i via virtual drive k in this timeslot.
class Mode : public DeliveryTensor {
 public:
  using DeliveryTensor::DeliveryTensor;
  static Mode empty(const StorageSystem& sys);
  static Mode from_deliveries(const StorageSystem& sys, const std::vector<Delivery>& deliveries);

  /// r_m(i,k).
  bool uses(int i, int k) const;
  /// Deliveries in canonical (chunk, drive, user) order.
  std::vector<Delivery> deliveries() const;
  int size() const;
};

enum class Constraint {
  UnstoredDelivery,
  Innovation,
  Reception,
  DriveRead,
  SingleUnicast,
  MultipleUnicast,
  Broadcast,
  Multicast,
};

std::string_view to_string(Constraint c);

struct ModeVerdict {
  bool valid = true;
  std::vector<Constraint> violations;
};

struct ValidationOptions {
  /// One read per virtual drive; disabled when analysing infinite I/O bandwidth.
  bool enforce_drive_reads = true;
};

ModeVerdict validate_mode(const StorageSystem& sys, const KnowledgeState& knowledge, const Mode& mode,
                          TrafficPattern pattern, ValidationOptions options = {});

inline constexpr int kMaxEnumeratedTriples = 24;

/// Every nonempty valid mode by exhaustive search over stored delivery triples,
/// ordered by size and then lexicographically over canonical triple indices.
std::vector<Mode> enumerate_valid_modes(const StorageSystem& sys, const KnowledgeState& knowledge,
                                        TrafficPattern pattern);

}  // namespace qcn
