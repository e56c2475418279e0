#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcn/coded.hpp"
#include "qcn/error.hpp"
#include "qcn/rate_region.hpp"
#include "support.hpp"

using namespace qcn;
using qcn::test::config_path;
using qcn::test::make_system;

namespace {

SystemDescription two_chunks(const std::string& coding, int users = 1) {
  return parse_system_description("[system]\nusers = " + std::to_string(users) +
                                  "\nchunks = 2\n[drive 1]\nstores = f1\n[drive 2]\nstores = f2\n[coding]\n" + coding);
}

}  // namespace

TEST_CASE("coded transform of the two-drive example") {
  auto desc = load_system_description(config_path("ex5.qcn"));
  auto base = build_system(desc);
  auto layout = layout_from_description(desc);
  auto t = coded_transform(base, layout);
  CHECK(t.links.size() == 4);
  CHECK(t.added == std::vector<Link>{{0, 1}, {1, 0}});
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) CHECK(t.system.stores(i, k));
  auto g = build_conflict_graph(t.system, TrafficPattern::Multicast);
  CHECK(g.size() == 4);
  CHECK(g.graph().edge_count() == 2);
  CHECK(g.graph().adjacent(test::find_vertex(g, 1, 1, 1), test::find_vertex(g, 2, 1, 1)));
  CHECK(g.graph().adjacent(test::find_vertex(g, 1, 2, 1), test::find_vertex(g, 2, 2, 1)));
}

TEST_CASE("singleton generations leave the system unchanged") {
  auto desc = two_chunks("generation a = f1 ; s = 1\ngeneration b = f2 ; s = 1\n"
                         "drive 1 stores 1 of a\ndrive 2 stores 1 of b\n");
  auto base = build_system(desc);
  auto t = coded_transform(base, layout_from_description(desc));
  CHECK(t.added.empty());
  auto g0 = build_conflict_graph(base, TrafficPattern::Multicast);
  auto g1 = build_conflict_graph(t.system, TrafficPattern::Multicast);
  CHECK(g0.graph() == g1.graph());
  CHECK(RateRegion(g0).volume() == RateRegion(g1).volume());
}

TEST_CASE("striped layout") {
  auto base = make_system(2, 2, {{1}, {2}}, {1, 1});
  auto layout = striped_layout(base);
  REQUIRE(layout.generations().size() == 1);
  CHECK(layout.generations()[0].decode_threshold == 2);
  CHECK(layout.coded_chunks().size() == 2);
  CHECK(layout.coded_on(0, 0) == std::vector<int>{0});
  CHECK(layout.coded_on(1, 0) == std::vector<int>{1});
  CHECK_THROWS_AS(striped_layout(make_system(2, 1, {{1, 2}})), Error);
}

TEST_CASE("layout validation") {
  CHECK_THROWS_AS(layout_from_description(two_chunks("generation a = f1 f2 ; s = 3\ndrive 1 stores 1 of a\n"
                                                     "drive 2 stores 1 of a\n")),
                  Error);
  CHECK_THROWS_AS(layout_from_description(two_chunks("generation a = f1 f2 ; s = 1\ngeneration b = f2 ; s = 1\n"
                                                     "drive 1 stores 1 of a\ndrive 2 stores 1 of b\n")),
                  Error);
  // drive 2 keeps an uncoded replica of a coded chunk
  CHECK_THROWS_AS(layout_from_description(two_chunks("generation a = f1 f2 ; s = 1\ndrive 1 stores 1 of a\n")),
                  Error);
  CHECK_THROWS_AS(layout_from_description(two_chunks("generation a = f1 f2 ; s = 1\ndrive 7 stores 1 of a\n")),
                  Error);
  CHECK_THROWS_AS(layout_from_description(two_chunks("generation a = f1 f2 ; s = 1\ndrive 1 stores 1 of b\n")),
                  Error);
  CHECK_THROWS_AS(CodedLayout(1, {{"a", {0}, 1, 0}}, {{0, 0, 0}, {0, 0, 1}}, {{}, {}}, false), Error);
}

TEST_CASE("achievability for unicast") {
  auto meets = layout_from_description(two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 2 of a\n"
                                                  "drive 2 stores 2 of a\n"));
  CHECK(check_achievable_unicast(meets).achievable);
  auto short_one = layout_from_description(two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 2 of a\n"
                                                      "drive 2 stores 1 of a\n"));
  auto r = check_achievable_unicast(short_one);
  CHECK_FALSE(r.achievable);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].drive == 1);
  CHECK(r.violations[0].stored == 1);
  CHECK(r.violations[0].required == 2);
  auto ex5 = layout_from_description(load_system_description(config_path("ex5.qcn")));
  CHECK_FALSE(check_achievable_unicast(ex5).achievable);
}

TEST_CASE("achievability for any pattern") {
  auto five = layout_from_description(two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 5 of a\n"
                                                 "drive 2 stores 5 of a\n", 2));
  CHECK(check_achievable_any(five, 2).achievable);
  auto four = layout_from_description(two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 4 of a\n"
                                                 "drive 2 stores 5 of a\n", 2));
  auto r = check_achievable_any(four, 2);
  CHECK_FALSE(r.achievable);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].required == 5);
  // N = 0 needs s + 1, one more than the unicast condition
  auto two = layout_from_description(two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 2 of a\n"
                                                "drive 2 stores 2 of a\n"));
  CHECK(check_achievable_unicast(two).achievable);
  CHECK_FALSE(check_achievable_any(two, 0).achievable);
}

TEST_CASE("degrees of freedom in exact mode") {
  auto desc = two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 2 of a\ndrive 2 stores 1 of a\n");
  auto base = build_system(desc);
  auto layout = layout_from_description(desc);
  auto t = coded_transform(base, layout);
  DofTracker tr(layout, 1);

  auto fresh = knowledge_state(t.system, tr, DofMode::Exact);
  CHECK(fresh == KnowledgeState::all_stored(t.system));

  CHECK(tr.receive(0, 2, DofMode::Exact) == Receipt::Accepted);
  CHECK(tr.remaining(0, 0) == 1);
  // drive 2 holds only chunk 2, already held by the user
  auto s = knowledge_state(t.system, tr, DofMode::Exact);
  CHECK_FALSE(s.get(0, 0, 1));
  CHECK(s.get(0, 0, 0));
  CHECK(tr.receive(0, 2, DofMode::Exact) == Receipt::Rejected);
  CHECK_THROWS_AS(update_knowledge(t.system, tr, {0, 2}, DofMode::Exact), Error);

  auto after = update_knowledge(t.system, tr, {0, 0}, DofMode::Exact);
  CHECK(tr.decoded(0, 0));
  CHECK(tr.remaining(0, 0) == 0);
  CHECK(tr.received(0, 0) == 2);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) CHECK_FALSE(after.get(i, 0, k));
  CHECK(tr.receive(0, 1, DofMode::Exact) == Receipt::Rejected);

  tr.reset(0, 0);
  CHECK_FALSE(tr.decoded(0, 0));
  CHECK(tr.remaining(0, 0) == 2);
}

TEST_CASE("degrees of freedom in upper-bound mode and with cycling") {
  auto desc = two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 1 of a\ndrive 2 stores 1 of a\n");
  auto layout = layout_from_description(desc);
  DofTracker ub(layout, 1);
  CHECK(ub.receive(0, 0, DofMode::UpperBound) == Receipt::Accepted);
  CHECK(ub.receive(0, 0, DofMode::UpperBound) == Receipt::Decoded);
  CHECK(ub.decoded(0, 0));

  auto cyc = layout_from_description(two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 1 of a\n"
                                                "drive 2 stores 1 of a\ncoefficient_cycling = true\n"));
  DofTracker ex(cyc, 1);
  CHECK(ex.receive(0, 1, DofMode::Exact) == Receipt::Accepted);
  CHECK(ex.receive(0, 1, DofMode::Exact) == Receipt::Decoded);
}

TEST_CASE("received count never exceeds s") {
  auto desc = two_chunks("generation a = f1 f2 ; s = 2\ndrive 1 stores 3 of a\ndrive 2 stores 3 of a\n", 2);
  auto layout = layout_from_description(desc);
  DofTracker tr(layout, 2);
  for (int id = 0; id < 6; ++id)
    for (int j = 0; j < 2; ++j) {
      tr.receive(j, id, DofMode::Exact);
      CHECK(tr.received(j, 0) <= 2);
      CHECK(tr.decoded(j, 0) == (tr.remaining(j, 0) == 0));
    }
  CHECK(tr.decoded(0, 0));
  CHECK(tr.decoded(1, 0));
}
