#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcn/error.hpp"
#include "qcn/lp.hpp"
#include "qcn/pipeline.hpp"
#include "qcn/polytope.hpp"
#include "qcn/rate_region.hpp"
#include "qcn/stable_sets.hpp"
#include "support.hpp"

using namespace qcn;
using qcn::test::config_path;
using qcn::test::make_system;

namespace {

Analysis example(const std::string& name, bool coded = false) {
  AnalysisOptions opts;
  opts.coded = coded;
  return analyze(load_system_description(config_path(name)), opts);
}

std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST_CASE("stable set counts of the worked examples") {
  CHECK(enumerate_stable_sets(example("ex1.qcn").graph.graph()).size() == 3);
  CHECK(enumerate_stable_sets(example("ex2.qcn").graph.graph()).size() == 2);
  CHECK(enumerate_stable_sets(example("ex3.qcn").graph.graph()).size() == 1);
  auto ex5 = example("ex5.qcn", true);
  CHECK(ex5.graph.size() == 4);
  CHECK(ex5.graph.graph().edge_count() == 2);
  CHECK(enumerate_stable_sets(ex5.graph.graph()).size() == 8);
}

TEST_CASE("stable set enumeration order and guards") {
  auto fam = enumerate_stable_sets(SimpleGraph(4));
  CHECK(fam.size() == 15);
  CHECK(fam.sets.front() == std::vector<int>{0});
  CHECK(fam.sets.back() == std::vector<int>{0, 1, 2, 3});
  CHECK(fam.incidence(4) == std::vector<int>{1, 1, 0, 0});
  for (int n : {1, 5, 10}) CHECK(enumerate_stable_sets(SimpleGraph(n)).size() == (std::size_t{1} << n) - 1);
  StableSetOptions small;
  small.max_sets = 10;
  CHECK_THROWS_AS(enumerate_stable_sets(SimpleGraph(4), small), Error);
}

TEST_CASE("incidence vectors of the worked examples") {
  auto ex1 = example("ex1.qcn");
  auto f1 = enumerate_stable_sets(ex1.graph.graph());
  FlowIncidence c1(ex1.graph, f1);
  CHECK(c1.aggregate(0, 0) == std::vector<int>{1, 0, 1});
  CHECK(c1.aggregate(0, 1) == std::vector<int>{0, 1, 1});
  CHECK(c1.per_drive(0, 0, 0) == std::vector<int>{1, 0, 1});

  auto ex3 = example("ex3.qcn");
  FlowIncidence c3(ex3.graph, enumerate_stable_sets(ex3.graph.graph()));
  CHECK(c3.aggregate(0, 0) == std::vector<int>{1});
  CHECK(c3.aggregate(0, 1) == std::vector<int>{1});

  auto ex5 = example("ex5.qcn", true);
  FlowIncidence c5(ex5.graph, enumerate_stable_sets(ex5.graph.graph()));
  CHECK(c5.aggregate(0, 0) == std::vector<int>{1, 1, 0, 0, 2, 1, 1, 0});
  CHECK(c5.aggregate(1, 0) == std::vector<int>{0, 0, 1, 1, 0, 1, 1, 2});
  CHECK(c5.active_flows() == std::vector<int>{0, 1});
}

TEST_CASE("aggregation is the sum over drives") {
  auto a = example("ex6.qcn", true);
  auto fam = enumerate_stable_sets(a.graph.graph());
  FlowIncidence c(a.graph, fam);
  for (int i = 0; i < c.num_chunks(); ++i)
    for (int j = 0; j < c.num_users(); ++j)
      for (std::size_t l = 0; l < fam.size(); ++l) {
        int sum = 0;
        for (int k = 0; k < c.drive_slots(); ++k) sum += c.per_drive(i, k, j)[l];
        CHECK(sum == c.aggregate(i, j)[l]);
      }
}

TEST_CASE("polytope hull of basic shapes") {
  auto square = Polytope::hull(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}});
  CHECK(square.vertices() == std::vector<IntPoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(square.facets().size() == 4);
  CHECK(square.volume() == 1);
  CHECK(square.contains(IntPoint{1, 1}));
  CHECK_FALSE(square.contains(std::vector<Rational>{Rational(1), Rational(11, 10)}));

  std::vector<IntPoint> cube;
  for (int m = 0; m < 16; ++m) cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1});
  auto c4 = Polytope::hull(4, cube);
  CHECK(c4.volume() == 1);
  CHECK(c4.vertices().size() == 16);
  CHECK(c4.facets().size() == 8);

  auto seg = Polytope::hull(2, {{0, 0}, {1, 1}});
  CHECK(seg.affine_dim() == 1);
  CHECK(seg.volume() == 0);
  CHECK(seg.equalities().size() == 1);
  CHECK(seg.contains(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(seg.contains(IntPoint{1, 0}));

  auto interior = Polytope::hull(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK(interior.vertices().size() == 3);
  CHECK(interior.volume() == 8);
  CHECK(format_hyperplane({{1, -1}, 2}, "<=") == "x1 - x2 <= 2");
}

TEST_CASE("simplex volumes are 1/d!") {
  Rational fact = 1;
  for (int d = 1; d <= 6; ++d) {
    fact *= d;
    std::vector<IntPoint> pts{IntPoint(d, 0)};
    for (int i = 0; i < d; ++i) {
      IntPoint e(d, 0);
      e[i] = 1;
      pts.push_back(e);
    }
    CHECK(Polytope::hull(d, pts).volume() == Rational(1) / fact);
  }
}

TEST_CASE("rate regions of the worked examples") {
  auto ex1 = RateRegion(example("ex1.qcn").graph);
  CHECK(ex1.dim() == 2);
  CHECK(ex1.polytope().vertices() == std::vector<IntPoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(ex1.volume() == 1);
  CHECK(ex1.flow_name(0) == "r_1_1");

  auto ex2 = RateRegion(example("ex2.qcn").graph);
  CHECK(ex2.polytope().vertices() == std::vector<IntPoint>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(ex2.volume() == Rational(1, 2));

  CHECK(RateRegion(example("ex3.qcn").graph).volume() == 0);
  CHECK(RateRegion(example("ex4.qcn").graph).volume() == 1);

  auto ex5 = RateRegion(example("ex5.qcn", true).graph);
  CHECK(ex5.polytope().vertices() == std::vector<IntPoint>{{0, 0}, {0, 2}, {2, 0}});
  CHECK(ex5.volume() == 2);
}

TEST_CASE("membership") {
  auto ex1 = RateRegion(example("ex1.qcn").graph);
  CHECK(ex1.contains(R({1, 1})));
  CHECK(ex1.contains(R({0, 0})));
  CHECK_FALSE(ex1.contains(R({Rational(101, 100), 0})));
  auto neg = ex1.membership(R({-1, 0}));
  CHECK_FALSE(neg.inside);
  CHECK_FALSE(neg.diagnostic.empty());
  auto wrong = ex1.membership(R({1}));
  CHECK_FALSE(wrong.inside);
  CHECK(wrong.diagnostic.find("entries") != std::string::npos);
  CHECK_THROWS_AS(ex1.to_active(R({1})), Error);

  auto ex2 = RateRegion(example("ex2.qcn").graph);
  CHECK_FALSE(ex2.contains(R({1, 1})));
  CHECK(ex2.contains(R({Rational(1, 2), Rational(1, 2)})));
  CHECK(ex2.contains(R({Rational(1, 3), Rational(1, 3)})));
}

TEST_CASE("inactive flows are dropped when mapping rates") {
  auto a = example("ex2.qcn");
  RateRegion r(a.graph);
  auto all = r.to_all_flows(R({1, 0}));
  CHECK(all.size() == 2);
  CHECK(r.to_active(all) == R({1, 0}));
}

TEST_CASE("volume refusal above the dimension cap") {
  auto sys = make_system(3, 3, {{1, 2, 3}}, {1, 1, 1});
  auto g = build_conflict_graph(sys, TrafficPattern::SingleUnicast);
  RegionOptions opts;
  opts.max_volume_dim = 8;
  RateRegion r(g, opts);
  CHECK(r.dim() == 9);
  CHECK_FALSE(r.has_polytope());
  CHECK_THROWS_AS(r.volume(), Error);
  std::vector<Rational> rho(9, Rational(1, 9));
  CHECK(r.contains(rho));
  rho[0] = Rational(1, 2);
  CHECK_FALSE(r.contains(rho));
}

TEST_CASE("region export") {
  auto text = export_region(RateRegion(example("ex2.qcn").graph));
  CHECK(text.find("volume 1/2 0.5000") != std::string::npos);
  CHECK(text.find("vertices") != std::string::npos);
  CHECK(text.find("inequalities") != std::string::npos);
}

TEST_CASE("exact LP") {
  // minimise -x1 - x2 s.t. x1 + x2 + s = 1
  auto r = solve_lp({R({1, 1, 1})}, R({1}), R({-1, -1, 0}));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == -1);
  CHECK(r.x[0] == 1);
  CHECK(r.x[1] == 0);
  CHECK_FALSE(lp_feasible({R({1, 1})}, R({-1})));
  CHECK(solve_lp({R({1, -1})}, R({0}), R({-1, 0})).status == LpStatus::Unbounded);
}
