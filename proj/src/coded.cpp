#include "qcn/coded.hpp"

#include <algorithm>
#include <map>

#include "qcn/error.hpp"

namespace qcn {

CodedLayout::CodedLayout(int num_chunks, std::vector<Generation> generations, std::vector<CodedChunk> coded,
                         std::vector<std::vector<int>> uncoded_per_drive, bool coefficient_cycling)
    : chunks_(num_chunks),
      generations_(std::move(generations)),
      coded_(std::move(coded)),
      chunk_generation_(num_chunks, -1),
      cycling_(coefficient_cycling) {
  for (int g = 0; g < static_cast<int>(generations_.size()); ++g) {
    auto& gen = generations_[g];
    std::sort(gen.chunks.begin(), gen.chunks.end());
    if (gen.chunks.empty()) throw Error("generation " + gen.id + " has no chunks");
    if (std::adjacent_find(gen.chunks.begin(), gen.chunks.end()) != gen.chunks.end())
      throw Error("generation " + gen.id + " lists a chunk twice");
    for (int i : gen.chunks) {
      if (i < 0 || i >= num_chunks) throw Error("generation " + gen.id + " references an unknown chunk");
      if (chunk_generation_[i] >= 0)
        throw Error("chunk f" + std::to_string(i + 1) + " belongs to generations " +
                    generations_[chunk_generation_[i]].id + " and " + gen.id);
      chunk_generation_[i] = g;
    }
    if (gen.decode_threshold < 1) throw Error("generation " + gen.id + " needs s >= 1");
    gen.alpha = 0;
  }

  drives_.resize(uncoded_per_drive.size());
  std::vector<bool> seen_id;
  for (const auto& c : coded_) {
    if (c.id < 0) throw Error("negative coded chunk id");
    if (c.generation < 0 || c.generation >= static_cast<int>(generations_.size()))
      throw Error("coded chunk " + std::to_string(c.id) + " has an unknown generation");
    if (c.drive < 0 || c.drive >= static_cast<int>(drives_.size()))
      throw Error("coded chunk " + std::to_string(c.id) + " placed on an unknown drive");
    if (static_cast<int>(seen_id.size()) <= c.id) seen_id.resize(c.id + 1, false);
    if (seen_id[c.id]) throw Error("replicated coded chunk id " + std::to_string(c.id));
    seen_id[c.id] = true;
    ++generations_[c.generation].alpha;
    drives_[c.drive].coded.push_back(c.id);
  }
  for (std::size_t n = 0; n < drives_.size(); ++n) {
    auto& u = uncoded_per_drive[n];
    std::sort(u.begin(), u.end());
    for (int i : u) {
      if (i < 0 || i >= num_chunks) throw Error("drive stores an unknown chunk");
      if (chunk_generation_[i] >= 0)
        throw Error("chunk f" + std::to_string(i + 1) + " is coded but drive " + std::to_string(n + 1) +
                    " keeps an uncoded replica");
    }
    drives_[n].uncoded = u;
    std::sort(drives_[n].coded.begin(), drives_[n].coded.end());
  }
  for (const auto& gen : generations_)
    if (gen.decode_threshold > gen.alpha)
      throw Error("generation " + gen.id + " has s = " + std::to_string(gen.decode_threshold) + " but only " +
                  std::to_string(gen.alpha) + " coded chunks");
  std::vector<bool> covered(num_chunks, false);
  for (const auto& d : drives_)
    for (int i : d.uncoded) covered[i] = true;
  for (const auto& c : coded_)
    for (int i : generations_[c.generation].chunks) covered[i] = true;
  for (int i = 0; i < num_chunks; ++i)
    if (!covered[i]) throw Error("uncovered chunk f" + std::to_string(i + 1));
}

const CodedChunk& CodedLayout::coded_chunk(int id) const {
  for (const auto& c : coded_)
    if (c.id == id) return c;
  throw Error("unknown coded chunk id " + std::to_string(id));
}

std::vector<int> CodedLayout::coded_on(int n, int g) const {
  std::vector<int> out;
  for (int id : drives_.at(n).coded)
    if (coded_chunk(id).generation == g) out.push_back(id);
  return out;
}

CodedLayout layout_from_description(const SystemDescription& desc) {
  if (!desc.coding) throw Error("description has no [coding] section");
  const auto& coding = *desc.coding;
  std::vector<Generation> gens;
  std::map<std::string, int> gen_index;
  for (const auto& g : coding.generations) {
    gen_index[g.id] = static_cast<int>(gens.size());
    gens.push_back({g.id, g.chunks, g.decode_threshold, 0});
  }
  std::map<int, int> drive_index;
  for (std::size_t n = 0; n < desc.drives.size(); ++n) drive_index[desc.drives[n].id] = static_cast<int>(n);

  std::vector<int> chunk_gen(desc.num_chunks, -1);
  for (int g = 0; g < static_cast<int>(gens.size()); ++g)
    for (int i : gens[g].chunks)
      if (i >= 0 && i < desc.num_chunks) chunk_gen[i] = g;

  std::vector<CodedChunk> coded;
  std::vector<std::vector<bool>> placed(desc.drives.size(), std::vector<bool>(gens.size(), false));
  int next_id = 0;
  for (const auto& p : coding.placements) {
    auto d = drive_index.find(p.drive);
    if (d == drive_index.end()) throw Error("coding places chunks on unknown drive " + std::to_string(p.drive));
    auto g = gen_index.find(p.generation);
    if (g == gen_index.end()) throw Error("coding references unknown generation '" + p.generation + "'");
    if (p.count < 1) throw Error("coded chunk count must be positive");
    for (int c = 0; c < p.count; ++c) coded.push_back({next_id++, g->second, d->second});
    placed[d->second][g->second] = true;
  }
  std::vector<std::vector<int>> uncoded(desc.drives.size());
  for (std::size_t n = 0; n < desc.drives.size(); ++n)
    for (int i : desc.drives[n].chunks) {
      if (i < 0 || i >= desc.num_chunks) throw Error("drive stores an unknown chunk");
      if (chunk_gen[i] < 0)
        uncoded[n].push_back(i);
      else if (!placed[n][chunk_gen[i]])
        throw Error("chunk f" + std::to_string(i + 1) + " is coded but drive " + std::to_string(desc.drives[n].id) +
                    " keeps an uncoded replica");
    }
  return CodedLayout(desc.num_chunks, std::move(gens), std::move(coded), std::move(uncoded),
                     coding.coefficient_cycling);
}

CodedLayout striped_layout(const StorageSystem& base) {
  const int T = base.num_chunks();
  const int drives = static_cast<int>(base.physical_drives().size());
  if (drives < T)
    throw Error("striped layout needs at least T = " + std::to_string(T) + " drives, system has " +
                std::to_string(drives));
  Generation g{"g1", {}, T, 0};
  for (int i = 0; i < T; ++i) g.chunks.push_back(i);
  std::vector<CodedChunk> coded;
  for (int n = 0; n < drives; ++n) coded.push_back({n, 0, n});
  return CodedLayout(T, {g}, std::move(coded), std::vector<std::vector<int>>(drives), false);
}

namespace {

std::vector<Link> base_links(const StorageSystem& sys) {
  std::vector<Link> out;
  for (int i = 0; i < sys.num_chunks(); ++i)
    for (int k = 0; k < sys.num_virtual_drives(); ++k)
      if (sys.stores(i, k)) out.push_back({i, k});
  return out;
}

}  // namespace

CodedTransform coded_transform(const StorageSystem& base, const CodedLayout& layout) {
  if (layout.num_chunks() != base.num_chunks() ||
      layout.num_drives() != static_cast<int>(base.physical_drives().size()))
    throw Error("coded layout does not match the base system");
  std::vector<PhysicalDrive> drives;
  std::vector<std::vector<int>> links_per_drive(layout.num_drives());  // chunk per link, with multiplicity
  for (int n = 0; n < layout.num_drives(); ++n) {
    const auto& content = layout.drive(n);
    std::vector<int> stored = content.uncoded;
    links_per_drive[n] = content.uncoded;
    for (int id : content.coded) {
      const auto& gen = layout.generations()[layout.coded_chunk(id).generation];
      stored.insert(stored.end(), gen.chunks.begin(), gen.chunks.end());
      links_per_drive[n].insert(links_per_drive[n].end(), gen.chunks.begin(), gen.chunks.end());
    }
    std::sort(stored.begin(), stored.end());
    stored.erase(std::unique(stored.begin(), stored.end()), stored.end());
    drives.push_back({base.physical_drives()[n].units, std::move(stored)});
  }
  StorageSystem sys(base.num_chunks(), base.num_users(), std::move(drives), base.reception());

  std::vector<Link> links;
  for (int k = 0; k < sys.num_virtual_drives(); ++k)
    for (int i : links_per_drive[sys.virtual_drive(k).physical]) links.push_back({i, k});
  std::sort(links.begin(), links.end());

  std::vector<Link> before = base_links(base);
  std::vector<Link> added;
  std::set_difference(links.begin(), links.end(), before.begin(), before.end(), std::back_inserter(added));
  return {std::move(sys), std::move(links), std::move(added)};
}

namespace {

AchievabilityCheck check_counts(const CodedLayout& layout, int extra) {
  AchievabilityCheck out;
  for (int n = 0; n < layout.num_drives(); ++n)
    for (int g = 0; g < static_cast<int>(layout.generations().size()); ++g) {
      int stored = static_cast<int>(layout.coded_on(n, g).size());
      if (stored == 0) continue;
      int required = layout.generations()[g].decode_threshold + extra;
      if (stored < required) {
        out.achievable = false;
        out.violations.push_back({n, g, stored, required});
      }
    }
  return out;
}

}  // namespace

AchievabilityCheck check_achievable_unicast(const CodedLayout& layout) { return check_counts(layout, 0); }

AchievabilityCheck check_achievable_any(const CodedLayout& layout, int num_users) {
  if (num_users < 0) throw Error("negative user count");
  return check_counts(layout, num_users + 1);
}

DofTracker::DofTracker(const CodedLayout& layout, int num_users)
    : layout_(&layout), users_(num_users), cells_(static_cast<std::size_t>(num_users) * layout.generations().size()) {}

const DofTracker::Cell& DofTracker::cell(int user, int generation) const {
  if (user < 0 || user >= users_ || generation < 0 || generation >= static_cast<int>(layout_->generations().size()))
    throw Error("dof tracker index out of range");
  return cells_[static_cast<std::size_t>(user) * layout_->generations().size() + generation];
}

DofTracker::Cell& DofTracker::cell(int user, int generation) {
  return const_cast<Cell&>(static_cast<const DofTracker*>(this)->cell(user, generation));
}

bool DofTracker::holds(int user, int coded_id) const {
  const auto& c = cell(user, layout_->coded_chunk(coded_id).generation);
  return std::find(c.held.begin(), c.held.end(), coded_id) != c.held.end();
}

int DofTracker::remaining(int user, int generation) const {
  int s = layout_->generations()[generation].decode_threshold;
  return std::max(0, s - received(user, generation));
}

Receipt DofTracker::receive(int user, int coded_id, DofMode mode) {
  const int g = layout_->coded_chunk(coded_id).generation;
  Cell& c = cell(user, g);
  if (c.decoded) return Receipt::Rejected;
  const bool exact = mode == DofMode::Exact && !layout_->coefficient_cycling();
  if (exact && std::find(c.held.begin(), c.held.end(), coded_id) != c.held.end()) return Receipt::Rejected;
  c.held.push_back(coded_id);
  if (static_cast<int>(c.held.size()) >= layout_->generations()[g].decode_threshold) {
    c.decoded = true;
    return Receipt::Decoded;
  }
  return Receipt::Accepted;
}

void DofTracker::reset(int user, int generation) { cell(user, generation) = Cell{}; }

KnowledgeState knowledge_state(const StorageSystem& transformed, const DofTracker& tracker, DofMode mode) {
  const CodedLayout& layout = tracker.layout();
  const bool exact = mode == DofMode::Exact && !layout.coefficient_cycling();
  KnowledgeState s(transformed.num_chunks(), transformed.num_users(), transformed.num_virtual_drives());
  for (int k = 0; k < transformed.num_virtual_drives(); ++k) {
    const int n = transformed.virtual_drive(k).physical;
    for (int i = 0; i < transformed.num_chunks(); ++i) {
      if (!transformed.stores(i, k)) continue;
      const int g = layout.generation_of(i);
      for (int j = 0; j < transformed.num_users(); ++j) {
        bool innovative = true;
        if (g >= 0) {
          if (tracker.decoded(j, g)) {
            innovative = false;
          } else if (exact) {
            auto ids = layout.coded_on(n, g);
            innovative = std::any_of(ids.begin(), ids.end(), [&](int id) { return !tracker.holds(j, id); });
          }
        }
        s.set(i, j, k, innovative);
      }
    }
  }
  return s;
}

KnowledgeState update_knowledge(const StorageSystem& transformed, DofTracker& tracker, const CodedDelivery& d,
                                DofMode mode) {
  if (tracker.receive(d.user, d.coded_id, mode) == Receipt::Rejected)
    throw Error("coded chunk " + std::to_string(d.coded_id) + " rejected for user " + std::to_string(d.user + 1) +
                ": already held or generation decoded");
  return knowledge_state(transformed, tracker, mode);
}

}  // namespace qcn
