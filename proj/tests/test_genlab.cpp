#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>
#include <unordered_set>

#include "qbmg/formats.hpp"
#include "qbmg/genlab.hpp"
#include "qbmg/oracles.hpp"
#include "qbmg/semantics.hpp"
#include "support/fixtures.hpp"

using namespace qbmg;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_config;
}

}  // namespace

TEST_CASE("splitmix64 matches the reference sequence") {
  SplitMix64 rng{0};
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  SplitMix64 rng42{42};
  CHECK(rng42.next() == 0xbdd732262feb6e95ULL);
}

TEST_CASE("random_tree basics") {
  TreeGenConfig cfg;
  cfg.leaf_count = 1;
  cfg.seed = 5;
  auto single = random_tree(cfg);
  CHECK(single.node_count() == 1);
  CHECK(single.node(single.root()).trunc == Trunc::self);

  cfg.leaf_count = 4;
  cfg.internal_bias = 0.0;
  auto star = random_tree(cfg);
  CHECK(star.internal_count() == 1);
  CHECK(star.node(star.root()).children.size() == 4);

  cfg.internal_bias = 0.7;
  auto a = random_tree(cfg);
  auto b = random_tree(cfg);
  CHECK(serialize_tree(a) == serialize_tree(b));

  cfg.leaf_count = 0;
  CHECK(code_of([&] { random_tree(cfg); }) == Errc::invalid_config);
  cfg.leaf_count = 3;
  cfg.color_prob = 1.5;
  CHECK(code_of([&] { random_tree(cfg); }) == Errc::invalid_config);
}

TEST_CASE("random_tree output is always a valid tree") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TreeGenConfig cfg;
    cfg.leaf_count = 1 + static_cast<int>(seed % 17);
    cfg.seed = seed;
    cfg.internal_bias = 0.1 * static_cast<double>(seed % 11);
    cfg.trunc_self_prob = 0.1 * static_cast<double>(seed % 10);
    auto t = random_tree(cfg);
    t.validate();
    CHECK(t.leaf_count() == cfg.leaf_count);
  }
}

TEST_CASE("random_bipartite basics") {
  auto full = random_bipartite(7, 1.0, 3);
  const int zeros = full.count_color(Color::zero);
  CHECK(full.edge_count() ==
        static_cast<std::size_t>(zeros * (7 - zeros)));

  CHECK(random_bipartite(7, 0.0, 3).edge_count() == 0);

  auto a = random_bipartite(8, 0.4, 11);
  auto b = random_bipartite(8, 0.4, 11);
  CHECK(a == b);
  a.validate();
}

TEST_CASE("enumerate_bipartite at max_n=2") {
  EnumConfig cfg;
  cfg.max_n = 2;
  cfg.connected_only = true;
  auto labeled = enumerate_bipartite_all(cfg);
  // K1, then the single edge under both minority colorings.
  REQUIRE(labeled.size() == 3);
  CHECK(labeled[0].size() == 1);
  CHECK(labeled[1].size() == 2);
  CHECK(labeled[1].edge_count() == 1);
  CHECK(labeled[2].edge_count() == 1);
  CHECK(labeled[1].color(0) != labeled[2].color(0));

  cfg.dedupe = Dedupe::iso_classes;
  auto classes = enumerate_bipartite_all(cfg);
  // The two edge colorings collapse; K1 stays its own class.
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 2);
}

TEST_CASE("enumerate_bipartite guards the cap") {
  EnumConfig cfg;
  cfg.max_n = 9;
  CHECK(code_of([&] { enumerate_bipartite(cfg, [](const BiGraph&) {
                        return true;
                      }); }) == Errc::size_cap_exceeded);
}

TEST_CASE("enumeration is deterministic") {
  EnumConfig cfg;
  cfg.max_n = 4;
  std::string first, second;
  enumerate_bipartite(cfg, [&](const BiGraph& g) {
    first += serialize_graph(g);
    return true;
  });
  enumerate_bipartite(cfg, [&](const BiGraph& g) {
    second += serialize_graph(g);
    return true;
  });
  CHECK(first == second);
}

TEST_CASE("labeled connected count up to five vertices is pinned") {
  EnumConfig cfg;
  cfg.max_n = 5;
  cfg.connected_only = true;
  std::size_t count = 0;
  enumerate_bipartite(cfg, [&](const BiGraph&) {
    ++count;
    return true;
  });
  CHECK(count == 235);
}

TEST_CASE("canonical_form identifies relabelings and color swaps") {
  auto p4a = BiGraph::from_edges({Color::zero, Color::one, Color::zero,
                                  Color::one},
                                 std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  auto p4b = BiGraph::from_edges({Color::one, Color::zero, Color::one,
                                  Color::zero},
                                 std::vector<Edge>{{2, 1}, {1, 0}, {0, 3}});
  CHECK(canonical_form(p4a) == canonical_form(p4b));

  auto k2 = fixtures::k2();
  auto star = BiGraph::from_edges({Color::zero, Color::one, Color::zero},
                                  std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(canonical_form(k2) != canonical_form(star));
  CHECK(code_of([] { canonical_form(random_bipartite(9, 0.5, 0)); }) ==
        Errc::size_cap_exceeded);
}

TEST_CASE("iso classes at n=6: rejected classes equal pattern-bearing classes") {
  EnumConfig cfg;
  cfg.max_n = 6;
  cfg.connected_only = true;
  cfg.dedupe = Dedupe::iso_classes;
  std::size_t rejected_classes = 0;
  std::size_t pattern_classes = 0;
  std::size_t total = 0;
  enumerate_bipartite(cfg, [&](const BiGraph& g) {
    ++total;
    if (!heart_tree(g).accepted()) ++rejected_classes;
    if (find_forbidden(g).has_value()) ++pattern_classes;
    return true;
  });
  CHECK(rejected_classes == pattern_classes);
  CHECK(rejected_classes == 2);  // the six-vertex path and the six-cycle
  CHECK(total == 28);            // regression constant for this enumerator
}

TEST_CASE("cross_check agrees on the named corpora") {
  std::vector<BiGraph> fixtures_corpus{fixtures::p6(), fixtures::c6(),
                                       fixtures::sunlet4()};
  auto report = cross_check(fixtures_corpus);
  CHECK(report.total == 3);
  CHECK(report.rejected == 3);
  CHECK(report.all_agree());

  EnumConfig cfg;
  cfg.max_n = 4;
  cfg.connected_only = true;
  auto small = enumerate_bipartite_all(cfg);
  auto small_report = cross_check(small);
  CHECK(small_report.all_agree());
  CHECK(small_report.accepted == small_report.total);
}

TEST_CASE("three-way agreement on random ten-vertex graphs") {
  OracleCaps caps;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    auto g = random_bipartite(10, 0.05 * static_cast<double>(seed % 14), seed);
    CHECK(cross_check_one(g, caps).agree());
  }
}

TEST_CASE("union verdicts follow the components") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    TreeGenConfig cfg;
    cfg.leaf_count = 5;
    cfg.seed = seed;
    auto g1 = explain(random_tree(cfg)).graph;
    cfg.seed = seed + 500;
    auto g2 = explain(random_tree(cfg)).graph;
    auto joined = disjoint_union(std::vector<BiGraph>{g1, g2});
    CHECK(heart_tree(joined).accepted());
    auto poisoned = disjoint_union(std::vector<BiGraph>{g1, fixtures::p6()});
    CHECK_FALSE(heart_tree(poisoned).accepted());
  }
}
