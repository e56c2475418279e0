#include "qcn/mode.hpp"

#include <algorithm>
#include <bit>

#include "qcn/error.hpp"

namespace qcn {

KnowledgeState KnowledgeState::all_stored(const StorageSystem& sys) {
  KnowledgeState s(sys.num_chunks(), sys.num_users(), sys.num_virtual_drives());
  for (int i = 0; i < sys.num_chunks(); ++i)
    for (int k = 0; k < sys.num_virtual_drives(); ++k)
      if (sys.stores(i, k))
        for (int j = 0; j < sys.num_users(); ++j) s.set(i, j, k);
  return s;
}

Mode Mode::empty(const StorageSystem& sys) {
  return Mode(sys.num_chunks(), sys.num_users(), sys.num_virtual_drives());
}

Mode Mode::from_deliveries(const StorageSystem& sys, const std::vector<Delivery>& deliveries) {
  Mode m = empty(sys);
  for (const auto& d : deliveries) {
    if (d.chunk < 0 || d.chunk >= sys.num_chunks() || d.user < 0 || d.user >= sys.num_users() || d.drive < 0 ||
        d.drive >= sys.num_virtual_drives())
      throw Error("delivery index out of range");
    m.set(d.chunk, d.user, d.drive);
  }
  return m;
}

bool Mode::uses(int i, int k) const {
  for (int j = 0; j < users(); ++j)
    if (get(i, j, k)) return true;
  return false;
}

std::vector<Delivery> Mode::deliveries() const {
  std::vector<Delivery> out;
  for (int i = 0; i < chunks(); ++i)
    for (int k = 0; k < drives(); ++k)
      for (int j = 0; j < users(); ++j)
        if (get(i, j, k)) out.push_back({i, j, k});
  return out;
}

int Mode::size() const {
  int n = 0;
  for (int i = 0; i < chunks(); ++i)
    for (int j = 0; j < users(); ++j)
      for (int k = 0; k < drives(); ++k) n += get(i, j, k);
  return n;
}

std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::UnstoredDelivery: return "unstored_delivery";
    case Constraint::Innovation: return "innovation";
    case Constraint::Reception: return "reception";
    case Constraint::DriveRead: return "drive_read";
    case Constraint::SingleUnicast: return "single_unicast";
    case Constraint::MultipleUnicast: return "multiple_unicast";
    case Constraint::Broadcast: return "broadcast";
    case Constraint::Multicast: return "multicast";
  }
  return "unknown";
}

namespace {

// Pattern-specific constraint for a simple (non-composite) pattern.
bool pattern_holds(const StorageSystem& sys, const Mode& m, TrafficPattern p) {
  const int T = sys.num_chunks(), N = sys.num_users(), R = sys.num_virtual_drives();
  switch (p) {
    case TrafficPattern::SingleUnicast: {
      int total = 0;
      for (int i = 0; i < T; ++i)
        for (int k = 0; k < R; ++k)
          if (sys.stores(i, k))
            for (int j = 0; j < N; ++j) total += m.get(i, j, k);
      return total <= 1;
    }
    case TrafficPattern::MultipleUnicast:
    case TrafficPattern::Broadcast:
    case TrafficPattern::Multicast: {
      for (int i = 0; i < T; ++i)
        for (int k = 0; k < R; ++k) {
          if (!sys.stores(i, k)) continue;
          int receivers = 0;
          for (int j = 0; j < N; ++j) receivers += m.get(i, j, k);
          if (p == TrafficPattern::MultipleUnicast && receivers > 1) return false;
          if (p == TrafficPattern::Broadcast && receivers != 0 && receivers != N) return false;
          if (p == TrafficPattern::Multicast && receivers > N) return false;
        }
      return true;
    }
    default:
      return false;
  }
}

Constraint constraint_of(TrafficPattern p) {
  switch (p) {
    case TrafficPattern::SingleUnicast: return Constraint::SingleUnicast;
    case TrafficPattern::MultipleUnicast: return Constraint::MultipleUnicast;
    case TrafficPattern::Broadcast: return Constraint::Broadcast;
    default: return Constraint::Multicast;
  }
}

}  // namespace

ModeVerdict validate_mode(const StorageSystem& sys, const KnowledgeState& knowledge, const Mode& mode,
                          TrafficPattern pattern, ValidationOptions options) {
  if (!knowledge.same_shape(sys) || !mode.same_shape(sys)) throw Error("mode or knowledge shape does not match system");
  const int T = sys.num_chunks(), N = sys.num_users(), R = sys.num_virtual_drives();
  ModeVerdict v;
  auto fail = [&](Constraint c) {
    v.valid = false;
    if (std::find(v.violations.begin(), v.violations.end(), c) == v.violations.end()) v.violations.push_back(c);
  };

  for (int i = 0; i < T; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < R; ++k) {
        if (!mode.get(i, j, k)) continue;
        if (!sys.stores(i, k)) fail(Constraint::UnstoredDelivery);
        if (!knowledge.get(i, j, k)) fail(Constraint::Innovation);
      }

  for (int j = 0; j < N; ++j) {
    int received = 0;
    for (int i = 0; i < T; ++i)
      for (int k = 0; k < R; ++k) received += mode.get(i, j, k) && sys.stores(i, k);
    if (received > sys.rx(j)) fail(Constraint::Reception);
  }

  if (options.enforce_drive_reads)
    for (int k = 0; k < R; ++k) {
      int reads = 0;
      for (int i = 0; i < T; ++i) reads += mode.uses(i, k);
      if (reads > 1) fail(Constraint::DriveRead);
    }

  auto members = member_patterns(pattern);
  bool any = std::any_of(members.begin(), members.end(), [&](TrafficPattern p) { return pattern_holds(sys, mode, p); });
  if (!any)
    for (auto p : members) fail(constraint_of(p));
  return v;
}

std::vector<Mode> enumerate_valid_modes(const StorageSystem& sys, const KnowledgeState& knowledge,
                                        TrafficPattern pattern) {
  std::vector<Delivery> triples;
  for (int i = 0; i < sys.num_chunks(); ++i)
    for (int k = 0; k < sys.num_virtual_drives(); ++k)
      if (sys.stores(i, k))
        for (int j = 0; j < sys.num_users(); ++j) triples.push_back({i, j, k});
  if (static_cast<int>(triples.size()) > kMaxEnumeratedTriples)
    throw Error("mode enumeration needs " + std::to_string(triples.size()) + " delivery triples (limit " +
                std::to_string(kMaxEnumeratedTriples) + ")");

  const std::uint32_t n = static_cast<std::uint32_t>(triples.size());
  std::vector<std::uint32_t> accepted;
  Mode m = Mode::empty(sys);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    m = Mode::empty(sys);
    for (std::uint32_t t = 0; t < n; ++t)
      if (mask >> t & 1u) m.set(triples[t].chunk, triples[t].user, triples[t].drive);
    if (validate_mode(sys, knowledge, m, pattern).valid) accepted.push_back(mask);
  }

  // size, then lexicographic over the sorted member indices
  auto members = [](std::uint32_t mask) {
    std::vector<int> idx;
    for (int t = 0; mask; ++t, mask >>= 1)
      if (mask & 1u) idx.push_back(t);
    return idx;
  };
  std::sort(accepted.begin(), accepted.end(), [&](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return members(a) < members(b);
  });

  std::vector<Mode> out;
  out.reserve(accepted.size());
  for (auto mask : accepted) {
    Mode mode = Mode::empty(sys);
    for (std::uint32_t t = 0; t < n; ++t)
      if (mask >> t & 1u) mode.set(triples[t].chunk, triples[t].user, triples[t].drive);
    out.push_back(std::move(mode));
  }
  return out;
}

}  // namespace qcn
