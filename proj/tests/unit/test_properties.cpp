#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "qcn/classify.hpp"
#include "qcn/pipeline.hpp"
#include "qcn/rate_region.hpp"
#include "qcn/stable_sets.hpp"
#include "support.hpp"

using namespace qcn;
using qcn::test::config_path;
using qcn::test::make_system;
using qcn::test::random_system;

namespace {

Analysis example(const std::string& name, bool coded = false, std::optional<TrafficPattern> p = {}) {
  AnalysisOptions opts;
  opts.coded = coded;
  opts.pattern = p;
  return analyze(load_system_description(config_path(name)), opts);
}

std::set<std::vector<Delivery>> modes_of_family(const ConflictGraph& g, const StableSetFamily& fam) {
  std::set<std::vector<Delivery>> out;
  for (const auto& s : fam.sets) {
    auto d = g.deliveries(s);
    std::sort(d.begin(), d.end());
    out.insert(d);
  }
  return out;
}

std::set<std::vector<Delivery>> modes_of_oracle(const std::vector<Mode>& modes) {
  std::set<std::vector<Delivery>> out;
  for (const auto& m : modes) {
    auto d = m.deliveries();
    std::sort(d.begin(), d.end());
    out.insert(d);
  }
  return out;
}

/// Rational point sum_l w_l g_l with random convex weights over the generators and the origin.
std::vector<Rational> random_point(std::mt19937_64& rng, const RateRegion& r) {
  std::uniform_int_distribution<int> w(0, 20);
  std::vector<int> weights(r.generators().size() + 1);
  int total = 0;
  for (auto& x : weights) total += x = w(rng);
  if (total == 0) total = weights.back() = 1;
  std::vector<Rational> p(r.dim(), Rational(0));
  for (std::size_t l = 0; l < r.generators().size(); ++l)
    for (int f = 0; f < r.dim(); ++f) p[f] += Rational(weights[l] * r.generators()[l][f], total);
  return p;
}

}  // namespace

TEST_CASE("stable sets biject with valid modes on random systems") {
  std::mt19937_64 rng(20261014);
  int checked = 0;
  while (checked < 200) {
    auto sys = random_system(rng, 3, 3, 3, 2);
    auto pats = all_patterns();
    auto p = pats[std::uniform_int_distribution<std::size_t>(0, pats.size() - 1)(rng)];
    int triples = 0;
    for (int k = 0; k < sys.num_virtual_drives(); ++k)
      for (int i = 0; i < sys.num_chunks(); ++i) triples += sys.stores(i, k) ? sys.num_users() : 0;
    if (triples > 20) continue;
    auto g = build_conflict_graph(sys, p);
    auto fam = enumerate_stable_sets(g.graph());
    auto oracle = enumerate_valid_modes(sys, KnowledgeState::all_stored(sys), p);
    auto from_graph = modes_of_family(g, fam);
    CHECK(from_graph.size() == fam.size());
    CHECK(from_graph == modes_of_oracle(oracle));
    ++checked;
  }
}

TEST_CASE("regions are down-closed") {
  std::mt19937_64 rng(7);
  for (const char* name : {"ex1.qcn", "ex2.qcn", "ex6.qcn"}) {
    RateRegion r(example(name).graph);
    for (int s = 0; s < 1000 / 3 + 1; ++s) {
      auto rho = random_point(rng, r);
      REQUIRE(r.contains(rho));
      std::uniform_int_distribution<int> u(0, 10);
      for (auto& x : rho) x *= Rational(u(rng), 10);
      CHECK(r.contains(rho));
    }
  }
}

TEST_CASE("exact volumes agree with Monte-Carlo estimates") {
  struct Case {
    const char* config;
    bool coded;
    std::optional<TrafficPattern> pattern;
  };
  std::vector<Case> cases{{"ex1.qcn", false, {}},
                          {"ex2.qcn", false, {}},
                          {"ex4.qcn", false, {}},
                          {"ex5.qcn", true, {}},
                          {"ex6.qcn", false, TrafficPattern::SingleUnicast},
                          {"ex6.qcn", false, TrafficPattern::MultipleUnicast},
                          {"ex6.qcn", true, TrafficPattern::MultipleUnicast},
                          {"ex6.qcn", false, TrafficPattern::Multicast}};
  std::mt19937_64 rng(99);
  for (const auto& c : cases) {
    CAPTURE(c.config);
    RateRegion r(example(c.config, c.coded, c.pattern).graph);
    const auto& P = r.polytope();
    const int d = r.dim();
    std::int64_t box = 1;
    for (const auto& v : P.vertices())
      for (auto x : v) box = std::max(box, x);
    std::uniform_real_distribution<double> u(0.0, static_cast<double>(box));
    const int n = 1'000'000;
    int inside = 0;
    std::vector<double> x(d);
    for (int s = 0; s < n; ++s) {
      for (auto& xi : x) xi = u(rng);
      bool in = true;
      for (const auto& h : P.facets()) {
        double lhs = 0;
        for (int f = 0; f < d; ++f) lhs += static_cast<double>(h.a[f]) * x[f];
        if (lhs > static_cast<double>(h.b)) {
          in = false;
          break;
        }
      }
      inside += in;
    }
    const double vol_box = std::pow(static_cast<double>(box), d);
    const double p = static_cast<double>(inside) / n;
    const double estimate = p * vol_box;
    const double se = vol_box * std::sqrt(p * (1 - p) / n);
    const double exact = to_double(P.volume());
    CHECK(std::abs(estimate - exact) <= std::max(3 * se, 1e-12));
  }
}

TEST_CASE("degenerate regions have zero volume") {
  RateRegion ex3(example("ex3.qcn").graph);
  CHECK(ex3.polytope().affine_dim() < ex3.dim());
  CHECK(ex3.volume() == 0);
}

TEST_CASE("single unicast regions are unit simplices") {
  Rational fact = 1;
  for (int d = 1; d <= 6; ++d) {
    fact *= d;
    if (d % 2) continue;
    // d/2 chunks on one drive, 2 users
    std::vector<int> chunks;
    for (int i = 1; i <= d / 2; ++i) chunks.push_back(i);
    auto sys = make_system(d / 2, 2, {chunks});
    RateRegion r(build_conflict_graph(sys, TrafficPattern::SingleUnicast));
    CHECK(r.dim() == d);
    CHECK(r.volume() == Rational(1) / fact);
  }
}

TEST_CASE("aggregation linearity on random systems") {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 40; ++s) {
    auto sys = random_system(rng, 3, 2, 3, 2);
    auto g = build_conflict_graph(sys, TrafficPattern::Multicast);
    if (g.size() > 16) continue;
    auto fam = enumerate_stable_sets(g.graph());
    FlowIncidence c(g, fam);
    for (int i = 0; i < c.num_chunks(); ++i)
      for (int j = 0; j < c.num_users(); ++j)
        for (std::size_t l = 0; l < fam.size(); ++l) {
          int sum = 0;
          for (int k = 0; k < c.drive_slots(); ++k) sum += c.per_drive(i, k, j)[l];
          CHECK(sum == c.aggregate(i, j)[l]);
        }
  }
}

TEST_CASE("richer patterns give larger regions") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 25) {
    auto sys = random_system(rng, 2, 2, 2, 1);
    auto su = RateRegion(build_conflict_graph(sys, TrafficPattern::SingleUnicast));
    auto mu = RateRegion(build_conflict_graph(sys, TrafficPattern::MultipleUnicast));
    auto mc = RateRegion(build_conflict_graph(sys, TrafficPattern::Multicast));
    if (su.flows() != mu.flows() || mu.flows() != mc.flows()) continue;
    for (const auto& v : su.polytope().vertices()) CHECK(mu.contains(std::vector<Rational>(v.begin(), v.end())));
    for (const auto& v : mu.polytope().vertices()) CHECK(mc.contains(std::vector<Rational>(v.begin(), v.end())));
    CHECK(su.volume() <= mu.volume());
    CHECK(mu.volume() <= mc.volume());
    ++checked;
  }
}

TEST_CASE("construction is deterministic") {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    auto sys = random_system(rng, 3, 3, 2, 1);
    auto a = build_conflict_graph(sys, TrafficPattern::MultipleUnicast);
    auto b = build_conflict_graph(sys, TrafficPattern::MultipleUnicast);
    CHECK(a.hash() == b.hash());
    CHECK(enumerate_stable_sets(a.graph()).sets == enumerate_stable_sets(b.graph()).sets);
  }
}

TEST_CASE("classification matrix on random systems") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 30; ++s) {
    auto sys = random_system(rng, 3, 3, 2, 1);
    auto plain = sys.with_uniform_reception(1);
    for (auto p : {TrafficPattern::SingleUnicast, TrafficPattern::Broadcast, TrafficPattern::BroadcastOrSingleUnicast}) {
      auto r = classify(build_conflict_graph(plain, p));
      CHECK(r.perfect == Verdict::Yes);
      CHECK(r.stability_number == 1);
    }
    CHECK(classify(build_conflict_graph(sys, TrafficPattern::MultipleUnicast)).quasi_line);
    auto mpr = sys.with_uniform_reception(std::max(sys.num_chunks(), sys.num_virtual_drives()));
    CHECK(classify(build_conflict_graph(mpr, TrafficPattern::Multicast)).quasi_line);
  }
}
