#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coal/coalition.hpp"
#include "coal/enumerate.hpp"
#include "test_util.hpp"

using namespace coal;

TEST_CASE("partition grammar") {
  Partition p = parse_partition("0,5|1|2|3|4", 6);
  CHECK(p.size() == 5);
  CHECK(p.part(0) == vset(6, {0, 5}));
  CHECK(p.to_text() == "0,5|1|2|3|4");
  CHECK(parse_partition(" 0 , 5 | 1|2|3|4 ", 6).to_text() == "0,5|1|2|3|4");

  CHECK_THROWS_AS(parse_partition("0|1", 3), Error);        // gap
  CHECK_THROWS_AS(parse_partition("0,1|1,2", 3), Error);    // overlap
  CHECK_THROWS_AS(parse_partition("0|1|3", 3), Error);      // out of range
  CHECK_THROWS_AS(parse_partition("0||1", 2), ParseError);  // empty part
  CHECK_THROWS_AS(parse_partition("0,x|1", 2), ParseError);

  SUBCASE("canonical order sorts by smallest member") {
    Partition q = parse_partition("1|3|0,5|2|4", 6);
    CHECK(q.sorted_by_smallest_member().to_text() == "0,5|1|2|3|4");
  }
}

TEST_CASE("forms_coalition") {
  CHECK(forms_coalition(testutil::cycle(4), vset(4, {0}), vset(4, {1})));
  CHECK_FALSE(forms_coalition(testutil::complete(3), vset(3, {0}), vset(3, {1})));
  CHECK(forms_coalition(testutil::path(6), vset(6, {1}), vset(6, {4})));
  CHECK_THROWS_AS(
      forms_coalition(testutil::cycle(4), vset(4, {0, 1}), vset(4, {1})), Error);
  CHECK_THROWS_AS(forms_coalition(testutil::cycle(4), vset(4, {}), vset(4, {1})),
                  Error);
  SUBCASE("symmetric and implies the three domination facts") {
    std::mt19937 rng(3);
    const Graph g = testutil::path(6);
    for (int trial = 0; trial < 200; ++trial) {
      Mask a = rng() & g.vertices();
      Mask b = rng() & g.vertices() & ~a;
      if (!a || !b) continue;
      VertexSet va{a, 6}, vb{b, 6};
      bool ab = forms_coalition(g, va, vb);
      CHECK(ab == forms_coalition(g, vb, va));
      if (ab) {
        CHECK_FALSE(is_dominating(g, va));
        CHECK_FALSE(is_dominating(g, vb));
        CHECK(is_dominating(g, VertexSet{a | b, 6}));
      }
    }
  }
}

TEST_CASE("assess_partition") {
  SUBCASE("C_4 singletons: valid with all six pairs") {
    PartitionAssessment a =
        assess_partition(testutil::cycle(4), parse_partition("0|1|2|3", 4));
    CHECK(a.valid);
    CHECK(a.pair_count == 6);
    for (PartClass c : a.part_class) CHECK(c == PartClass::CoalitionMember);
  }
  SUBCASE("P_6 five-part example: valid with exactly three pairs") {
    PartitionAssessment a =
        assess_partition(testutil::path(6), parse_partition("1|3|0,5|2|4", 6));
    CHECK(a.valid);
    CHECK(a.pair_count == 3);
    CHECK(a.coalition_pairs ==
          std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {2, 3}});
  }
  SUBCASE("P_6 singletons: invalid, the endpoints are orphans") {
    PartitionAssessment a = assess_partition(testutil::path(6),
                                             parse_partition("0|1|2|3|4|5", 6));
    CHECK_FALSE(a.valid);
    CHECK(a.part_class[0] == PartClass::OrphanNonDominating);
  }
  SUBCASE("dominating non-singleton part invalidates") {
    PartitionAssessment a =
        assess_partition(testutil::complete(3), parse_partition("0,1|2", 3));
    CHECK_FALSE(a.valid);
    CHECK(a.part_class[0] == PartClass::InvalidDominatingNonSingleton);
  }
}

TEST_CASE("coalition number and count on the pinned families") {
  SUBCASE("C_4") {
    SearchOutcome cn = coalition_number(testutil::cycle(4));
    CHECK(cn.value == 4);
    CHECK(cn.witness->to_text() == "0|1|2|3");
    SearchOutcome cc = coalition_count(testutil::cycle(4));
    CHECK(cc.value == 6);
    CHECK(cn.partitions_examined > 0);
  }
  SUBCASE("K_5") {
    CHECK(coalition_number(testutil::complete(5)).value == 5);
    CHECK(coalition_count(testutil::complete(5)).value == 0);
  }
  SUBCASE("P_4") {
    CHECK(coalition_number(testutil::path(4)).value == 4);
    CHECK(coalition_count(testutil::path(4)).value == 4);
  }
  SUBCASE("P_6") {
    CHECK(coalition_number(testutil::path(6)).value == 5);
    SearchOutcome cc = coalition_count(testutil::path(6));
    CHECK(cc.value == 5);
    // the printed witness re-assesses to its own value
    PartitionAssessment a = assess_partition(testutil::path(6), *cc.witness);
    CHECK(a.valid);
    CHECK(a.pair_count == 5);
    // the known five-pair witness
    CHECK(assess_partition(testutil::path(6), parse_partition("0,4|1,5|2|3", 6))
              .pair_count == 5);
  }
  SUBCASE("witnesses re-assess to the reported value") {
    for (const Graph& g : all_graphs(5, EnumMode::UpToIsomorphism)) {
      SearchOutcome cn = coalition_number(g);
      if (!cn.value) continue;
      PartitionAssessment a = assess_partition(g, *cn.witness);
      CHECK(a.valid);
      CHECK(cn.witness->size() == *cn.value);
      SearchOutcome cc = coalition_count(g);
      CHECK(assess_partition(g, *cc.witness).pair_count == *cc.value);
    }
  }
  SUBCASE("deterministic witnesses") {
    SearchOutcome first = coalition_number(testutil::path(6));
    SearchOutcome second = coalition_number(testutil::path(6));
    CHECK(first.witness->to_text() == second.witness->to_text());
    CHECK(first.partitions_examined == second.partitions_examined);
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(coalition_number(testutil::empty_graph(13)), CapError);
  }
}

TEST_CASE("count equals the max coalition-graph edge count over valid partitions") {
  for (const Graph& g : all_graphs(5, EnumMode::UpToIsomorphism)) {
    SearchOutcome cc = coalition_count(g);
    int best_edges = -1;
    bool any = false;
    for_each_valid_partition(g, [&](const Partition& p,
                                    const PartitionAssessment&) {
      any = true;
      best_edges = std::max(best_edges, coalition_graph(g, p).cg.m());
    });
    if (!any)
      CHECK_FALSE(cc.value.has_value());
    else
      CHECK(cc.value == best_edges);
  }
}

TEST_CASE("coalition_graph") {
  SUBCASE("C_4 singletons give K_4") {
    CoalitionGraphResult r =
        coalition_graph(testutil::cycle(4), parse_partition("0|1|2|3", 4));
    CHECK(r.cg == testutil::complete(4));
    CHECK(r.part_labels == std::vector<std::string>{"0", "1", "2", "3"});
  }
  SUBCASE("K_3 singletons give the empty graph on 3 vertices") {
    CoalitionGraphResult r =
        coalition_graph(testutil::complete(3), parse_partition("0|1|2", 3));
    CHECK(r.cg == testutil::empty_graph(3));
  }
  SUBCASE("P_6 example: 5 vertices, 3 edges") {
    CoalitionGraphResult r =
        coalition_graph(testutil::path(6), parse_partition("1|3|0,5|2|4", 6));
    CHECK(r.cg.n() == 5);
    CHECK(r.cg.m() == 3);
    CHECK(r.cg.has_edge(0, 4));  // {1}-{4}
    CHECK(r.cg.has_edge(1, 2));  // {3}-{0,5}
    CHECK(r.cg.has_edge(2, 3));  // {0,5}-{2}
    CHECK(r.part_labels[2] == "0,5");
  }
  SUBCASE("invalid partition is an error") {
    CHECK_THROWS_AS(
        coalition_graph(testutil::path(6), parse_partition("0|1|2|3|4|5", 6)),
        Error);
  }
}

TEST_CASE("is_sp_graph") {
  CHECK(is_sp_graph(testutil::cycle(4)));
  CHECK(is_sp_graph(testutil::complete(5)));
  CHECK_FALSE(is_sp_graph(testutil::path(6)));
  SUBCASE("agrees with assessing the singleton partition") {
    for (const Graph& g : all_graphs(5, EnumMode::UpToIsomorphism)) {
      if (g.n() == 0) continue;
      std::vector<VertexSet> singles;
      for (int v = 0; v < g.n(); ++v)
        singles.push_back(vset(g.n(), {v}));
      bool valid = assess_partition(g, Partition(g.n(), singles)).valid;
      CHECK(is_sp_graph(g) == valid);
    }
  }
}

TEST_CASE("cpartition_from_domatic") {
  SUBCASE("C_4: split of {0,2} and {1,3}, bound 2") {
    auto [p, bound] = cpartition_from_domatic(testutil::cycle(4));
    CHECK(p.to_text() == "0|2|1|3");
    CHECK(bound == 2);
  }
  SUBCASE("star: bound d-f = 1 and at least one coalition") {
    auto [p, bound] = cpartition_from_domatic(testutil::star(4));
    CHECK(bound == 1);
    PartitionAssessment a = assess_partition(testutil::star(4), p);
    CHECK(a.valid);
    CHECK(a.pair_count >= 1);
  }
  SUBCASE("K_5: all full singletons, bound 0, zero coalitions") {
    auto [p, bound] = cpartition_from_domatic(testutil::complete(5));
    CHECK(p.to_text() == "0|1|2|3|4");
    CHECK(bound == 0);
    CHECK(assess_partition(testutil::complete(5), p).pair_count == 0);
  }
  SUBCASE("isolated vertices are rejected") {
    Graph g = combine(testutil::complete(2), testutil::complete(1),
                      CombineMode::Union);
    CHECK_THROWS_AS(cpartition_from_domatic(g), Error);
  }
  SUBCASE("valid with pair_count >= d-f over all no-isolate graphs n<=6") {
    for (int n = 2; n <= 6; ++n)
      for (const Graph& g : all_graphs(n, EnumMode::UpToIsomorphism)) {
        if (!vertex_roles(g).isolated.empty()) continue;
        auto [p, bound] = cpartition_from_domatic(g);
        PartitionAssessment a = assess_partition(g, p);
        CHECK(a.valid);
        CHECK(a.pair_count >= bound);
        CHECK(bound == domatic_number(g).d - vertex_roles(g).full_count);
      }
  }
}

TEST_CASE("C and c invariant under relabeling") {
  std::mt19937 rng(2024);
  for (const Graph& g : all_graphs(5, EnumMode::UpToIsomorphism)) {
    if (g.n() == 0) continue;
    SearchOutcome cn = coalition_number(g);
    SearchOutcome cc = coalition_count(g);
    for (int trial = 0; trial < 5; ++trial) {
      Graph h = relabeled(g, testutil::random_perm(g.n(), rng));
      CHECK(coalition_number(h).value == cn.value);
      CHECK(coalition_count(h).value == cc.value);
    }
  }
}
