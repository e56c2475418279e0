#include "qcn/classify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qcn {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::No: return "false";
    case Verdict::Yes: return "true";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

VertexSet closed(const SimpleGraph& g, int v) {
  VertexSet s = g.neighbors(v);
  s.set(v);
  return s;
}

int first_at_or_after(const VertexSet& s, int from) {
  if (from <= 0) {
    auto p = s.find_first();
    return p == VertexSet::npos ? -1 : static_cast<int>(p);
  }
  auto p = s.find_next(static_cast<std::size_t>(from - 1));
  return p == VertexSet::npos ? -1 : static_cast<int>(p);
}

template <class F>
void for_each(const VertexSet& s, F&& f) {
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
    if (!f(static_cast<int>(v))) return;
}

}  // namespace

std::optional<Claw> find_claw(const SimpleGraph& g) {
  for (int c = 0; c < g.size(); ++c) {
    const VertexSet& nc = g.neighbors(c);
    if (nc.count() < 3) continue;
    std::optional<Claw> found;
    for_each(nc, [&](int a) {
      VertexSet rest_a = nc - closed(g, a);
      for (int b = first_at_or_after(rest_a, a + 1); b >= 0; b = first_at_or_after(rest_a, b + 1)) {
        VertexSet rest_b = rest_a - closed(g, b);
        int d = first_at_or_after(rest_b, b + 1);
        if (d >= 0) {
          found = Claw{c, a, b, d};
          return false;
        }
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool is_claw(const SimpleGraph& g, const Claw& w) {
  for (int x : w)
    if (x < 0 || x >= g.size()) return false;
  auto [c, a, b, d] = w;
  if (a == b || a == d || b == d || c == a || c == b || c == d) return false;
  return g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) && !g.adjacent(a, b) && !g.adjacent(a, d) &&
         !g.adjacent(b, d);
}

bool neighbourhood_is_two_cliques(const SimpleGraph& g, int v) {
  // the closed neighbourhood splits into two cliques iff the complement of
  // G[N(v)] is bipartite (v joins either side)
  std::vector<int> nbrs;
  for_each(g.neighbors(v), [&](int w) {
    nbrs.push_back(w);
    return true;
  });
  std::vector<int> side(nbrs.size(), -1);
  for (std::size_t s = 0; s < nbrs.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < nbrs.size(); ++y) {
        if (y == x || g.adjacent(nbrs[x], nbrs[y])) continue;
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> find_quasi_line_violation(const SimpleGraph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (!neighbourhood_is_two_cliques(g, v)) return v;
  return std::nullopt;
}

namespace {

// Extends induced paths whose smallest vertex is path[0]; `blocked` holds the
// closed neighbourhoods of the interior vertices plus the path itself.
struct HoleSearch {
  const SimpleGraph& g;
  std::uint64_t& budget;
  std::vector<int> path;
  bool exhausted = false;

  bool extend(const VertexSet& blocked) {
    if (budget == 0) {
      exhausted = true;
      return false;
    }
    --budget;
    const int start = path.front();
    const int last = path.back();
    VertexSet cand = g.neighbors(last) - blocked;
    bool found = false;
    for_each(cand, [&](int v) {
      if (v <= start) return true;
      if (g.adjacent(v, start)) {
        int length = static_cast<int>(path.size()) + 1;
        if (length >= 5 && length % 2 == 1) {
          path.push_back(v);
          found = true;
          return false;
        }
        return true;
      }
      VertexSet next = blocked;
      if (path.size() >= 2) next |= g.neighbors(last);
      next.set(v);
      path.push_back(v);
      if (extend(next)) {
        found = true;
        return false;
      }
      path.pop_back();
      return !exhausted;
    });
    return found;
  }
};

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const SimpleGraph& g, std::uint64_t& budget) {
  const int n = g.size();
  for (int s = 0; s < n; ++s) {
    HoleSearch search{g, budget, {s}};
    for_each(g.neighbors(s), [&](int p1) {
      if (p1 <= s) return true;
      search.path = {s, p1};
      VertexSet blocked(static_cast<std::size_t>(n));
      blocked.set(s);
      blocked.set(p1);
      if (search.extend(blocked)) return false;
      return !search.exhausted;
    });
    if (search.path.size() >= 5 && is_induced_cycle(g, search.path)) return search.path;
    if (search.exhausted) return std::nullopt;
  }
  return std::nullopt;
}

bool is_induced_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) return false;
  for (int a = 0; a < len; ++a) {
    if (cycle[a] < 0 || cycle[a] >= g.size()) return false;
    for (int b = a + 1; b < len; ++b) {
      if (cycle[a] == cycle[b]) return false;
      bool consecutive = b == a + 1 || (a == 0 && b == len - 1);
      if (g.adjacent(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

PerfectnessResult check_perfect(const SimpleGraph& g, PerfectnessOptions options) {
  PerfectnessResult r;
  if (g.size() > options.vertex_cap) return r;
  std::uint64_t budget = options.work_budget;
  if (auto hole = find_odd_hole(g, budget)) {
    r.perfect = Verdict::No;
    r.witness = *hole;
    return r;
  }
  if (budget == 0) return r;
  SimpleGraph co = g.complement();
  if (auto hole = find_odd_hole(co, budget)) {
    r.perfect = Verdict::No;
    r.witness = *hole;
    r.antihole = true;
    return r;
  }
  if (budget == 0) return r;
  r.perfect = Verdict::Yes;
  return r;
}

std::optional<Net> find_net(const SimpleGraph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a) {
    const VertexSet ca = closed(g, a);
    for (int b = first_at_or_after(g.neighbors(a), a + 1); b >= 0; b = first_at_or_after(g.neighbors(a), b + 1)) {
      const VertexSet cb = closed(g, b);
      VertexSet common = g.neighbors(a) & g.neighbors(b);
      for (int c = first_at_or_after(common, b + 1); c >= 0; c = first_at_or_after(common, c + 1)) {
        const VertexSet cc = closed(g, c);
        VertexSet pas = g.neighbors(a) - cb - cc;
        for (int pa = first_at_or_after(pas, 0); pa >= 0; pa = first_at_or_after(pas, pa + 1)) {
          VertexSet pbs = g.neighbors(b) - ca - cc - closed(g, pa);
          for (int pb = first_at_or_after(pbs, 0); pb >= 0; pb = first_at_or_after(pbs, pb + 1)) {
            VertexSet pcs = g.neighbors(c) - ca - cb - closed(g, pa) - closed(g, pb);
            int pc = first_at_or_after(pcs, 0);
            if (pc >= 0) return Net{a, b, c, pa, pb, pc};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_net(const SimpleGraph& g, const Net& w) {
  for (int x : w)
    if (x < 0 || x >= g.size()) return false;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      if (w[i] == w[j]) return false;
      bool expected = (i < 3 && j < 3) || (i < 3 && j == i + 3);
      if (g.adjacent(w[i], w[j]) != expected) return false;
    }
  return true;
}

namespace {

int max_independent(const SimpleGraph& g, VertexSet live) {
  int taken = 0;
  // vertices of degree <= 1 within `live` belong to some maximum independent set
  for (bool changed = true; changed;) {
    changed = false;
    for (auto v = live.find_first(); v != VertexSet::npos; v = live.find_next(v)) {
      VertexSet nb = g.neighbors(static_cast<int>(v)) & live;
      if (nb.count() <= 1) {
        live -= nb;
        live.reset(v);
        ++taken;
        changed = true;
      }
    }
  }
  if (live.none()) return taken;
  int pivot = -1;
  std::size_t best = 0;
  for_each(live, [&](int v) {
    std::size_t d = (g.neighbors(v) & live).count();
    if (pivot < 0 || d > best) {
      pivot = v;
      best = d;
    }
    return true;
  });
  VertexSet without = live;
  without.reset(pivot);
  VertexSet with = live - g.neighbors(pivot);
  with.reset(pivot);
  return taken + std::max(max_independent(g, without), 1 + max_independent(g, with));
}

}  // namespace

int stability_number(const SimpleGraph& g) {
  VertexSet all(static_cast<std::size_t>(g.size()));
  all.set();
  return max_independent(g, all);
}

ClassificationReport classify(const SimpleGraph& g, PerfectnessOptions options) {
  ClassificationReport r;
  r.claw = find_claw(g);
  r.claw_free = !r.claw;
  r.quasi_line_violation = find_quasi_line_violation(g);
  r.quasi_line = !r.quasi_line_violation;
  auto p = check_perfect(g, options);
  r.perfect = p.perfect;
  r.odd_hole = p.witness;
  r.odd_antihole = p.antihole;
  r.net = find_net(g);
  r.stability_number = stability_number(g);
  return r;
}

ClassificationReport classify(const ConflictGraph& g, PerfectnessOptions options) {
  ClassificationReport r = classify(g.graph(), options);
  r.pairwise_exact = g.pairwise_exact();
  return r;
}

bool certify(const SimpleGraph& g, const ClassificationReport& r) {
  if (r.claw_free != !r.claw) return false;
  if (r.claw && !is_claw(g, *r.claw)) return false;
  if (r.quasi_line != !r.quasi_line_violation) return false;
  if (r.quasi_line_violation && neighbourhood_is_two_cliques(g, *r.quasi_line_violation)) return false;
  if (r.perfect == Verdict::No) {
    const SimpleGraph& host = r.odd_antihole ? g.complement() : g;
    if (r.odd_hole.size() < 5 || r.odd_hole.size() % 2 == 0 || !is_induced_cycle(host, r.odd_hole)) return false;
  }
  if (r.net && !is_net(g, *r.net)) return false;
  return true;
}

std::string format_report(const ConflictGraph& g, const ClassificationReport& r) {
  auto labels = [&](auto first, auto last) {
    std::string s;
    for (auto it = first; it != last; ++it) s += (it == first ? "" : ",") + g.label(*it);
    return s;
  };
  std::ostringstream os;
  os << "vertices=" << g.size() << "\n";
  os << "edges=" << g.graph().edge_count() << "\n";
  os << "claw_free=" << (r.claw_free ? "true" : "false") << "\n";
  if (r.claw) os << "claw=" << labels(r.claw->begin(), r.claw->end()) << "\n";
  os << "quasi_line=" << (r.quasi_line ? "true" : "false") << "\n";
  if (r.quasi_line_violation) os << "quasi_line_violation=" << g.label(*r.quasi_line_violation) << "\n";
  os << "perfect=" << to_string(r.perfect) << "\n";
  if (r.perfect == Verdict::No)
    os << (r.odd_antihole ? "odd_antihole=" : "odd_hole=") << labels(r.odd_hole.begin(), r.odd_hole.end()) << "\n";
  os << "net_found=" << (r.net ? "true" : "false") << "\n";
  if (r.net) os << "net=" << labels(r.net->begin(), r.net->end()) << "\n";
  os << "stability_number=" << r.stability_number << "\n";
  os << "pairwise_exact=" << (r.pairwise_exact ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace qcn
