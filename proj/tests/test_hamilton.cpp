#include <gtest/gtest.h>

#include <random>

#include "hamheavy/genlib.hpp"
#include "hamheavy/hamilton.hpp"
#include "oracles.hpp"

using namespace hamheavy;

namespace {

Graph two_triangles() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

Graph c5_with_chord() {
  Graph g = graphs::cycle(5);
  g.add_edge(0, 2);
  return g;
}

// C5 plus a degree-2 vertex joined to two cycle vertices.
Graph c5_with_ear() {
  Graph g = graphs::cycle(5).with_vertex(VertexSet::of({0, 2}));
  return g;
}

}  // namespace

TEST(Hamiltonicity, Examples) {
  const auto c5 = hamilton_cycle(graphs::cycle(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->length(), 5);
  EXPECT_FALSE(is_hamiltonian(graphs::complete_bipartite(2, 3)));
  EXPECT_FALSE(is_hamiltonian(graphs::petersen()));
  EXPECT_FALSE(is_hamiltonian(graphs::complete(2)));
  EXPECT_TRUE(is_hamiltonian(graphs::complete(3)));
}

TEST(Hamiltonicity, MatchesPermutationOracleUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    enumerate_into(n, Filter::all, [](const Graph& g) {
      const auto c = hamilton_cycle(g);
      ASSERT_EQ(c.has_value(), oracle::hamiltonian(g)) << to_graph6(g);
      if (c) { ASSERT_TRUE(is_cycle_in(g, c->vertices()) && c->length() == g.order()); }
    });
  }
}

TEST(Hamiltonicity, SubsetDpAgreesWithBacktracking) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 35) g.add_edge(i, j);
    const auto dp = detail::hamilton_by_subsets(g);
    ASSERT_EQ(dp.has_value(), is_hamiltonian(g));
    if (dp) { ASSERT_TRUE(is_cycle_in(g, dp->vertices())); }
  }
}

TEST(CycleThroughSet, Examples) {
  const auto c6 = cycle_through_set(graphs::cycle(6), VertexSet::of({0, 2, 4}));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->length(), 6);
  EXPECT_FALSE(cycle_through_set(two_triangles(), VertexSet::of({0, 1, 3})));
  EXPECT_FALSE(cycle_through_set(graphs::complete_bipartite(2, 3), VertexSet::range(5)));
  EXPECT_THROW(cycle_through_set(graphs::cycle(6), VertexSet::of({0, 1})), PreconditionError);
}

TEST(CycleThroughSet, MatchesOracleOnSixVertexGraphs) {
  enumerate_into(6, Filter::connected, [](const Graph& g) {
    for (std::uint32_t s = 0; s < 64; ++s) {
      const VertexSet set{s};
      if (set.size() < 3) continue;
      // oracle: some superset of s induces a Hamiltonian subgraph
      bool want = false;
      for (std::uint32_t t = s; t < 64 && !want; ++t)
        if ((t & s) == s) want = oracle::hamiltonian(induced(g, VertexSet{t}));
      const auto c = cycle_through_set(g, set);
      ASSERT_EQ(c.has_value(), want);
      if (c) { ASSERT_TRUE(set.subset_of(c->vertex_set()) && is_cycle_in(g, c->vertices())); }
    }
  });
}

TEST(LongestCycle, Examples) {
  EXPECT_EQ(longest_cycle(c5_with_chord()).length, 5);
  EXPECT_EQ(longest_cycle(graphs::complete_bipartite(2, 3)).length, 4);
  EXPECT_EQ(longest_cycle(graphs::petersen()).length, 9);
  EXPECT_THROW(longest_cycle(graphs::path(5)), PreconditionError);
  const LongestCycleInfo k23 = longest_cycle(graphs::complete_bipartite(2, 3));
  ASSERT_EQ(k23.components.size(), 1U);
  EXPECT_EQ(k23.components[0].attachments, VertexSet::of({0, 1}));
  EXPECT_TRUE(k23.heavy);
}

TEST(LongestCycle, MatchesCircumferenceOracle) {
  for (int n = 3; n <= 7; ++n) {
    enumerate_into(n, Filter::connected, [](const Graph& g) {
      const auto c = exact_solver().longest_cycle(g);
      ASSERT_EQ(c ? c->length() : 0, oracle::circumference(g)) << to_graph6(g);
    });
  }
}

TEST(ForEachCycle, CountsEveryCycleOnce) {
  // K5 has 10 triangles, 15 four-cycles, 12 five-cycles.
  const Graph k5 = graphs::complete(5);
  for (auto [len, want] : {std::pair{3, 10}, {4, 15}, {5, 12}}) {
    int seen = 0;
    for_each_cycle(k5, len, [&](const Cycle& c) {
      EXPECT_TRUE(is_cycle_in(k5, c.vertices()));
      ++seen;
      return true;
    });
    EXPECT_EQ(seen, want);
  }
}

TEST(CyclePredicates, NonextendableAndHeavy) {
  const Graph k4 = graphs::complete(4);
  const Cycle tri = Cycle::validated(k4, {0, 1, 2});
  EXPECT_FALSE(is_nonextendable(k4, tri));
  EXPECT_FALSE(is_heavy_cycle(k4, tri));
  const Graph k23 = graphs::complete_bipartite(2, 3);
  const Cycle sq = Cycle::validated(k23, {0, 2, 1, 3});
  EXPECT_TRUE(is_nonextendable(k23, sq));
  EXPECT_TRUE(is_heavy_cycle(k4, Cycle::validated(k4, {0, 1, 2, 3})));
  const Graph ear = c5_with_ear();
  EXPECT_TRUE(is_heavy_cycle(ear, Cycle::validated(ear, {0, 1, 2, 3, 4})));
  EXPECT_THROW(is_heavy_cycle(k23, Cycle::unchecked({0, 1, 2})), PreconditionError);
}

TEST(LongestCycleHeavy, Examples) {
  EXPECT_EQ(check_longest_cycles_heavy(graphs::complete(4)).verdict, Verdict::confirmed);
  EXPECT_EQ(check_longest_cycles_heavy(graphs::complete_bipartite(2, 3)).verdict, Verdict::confirmed);
  EXPECT_EQ(check_longest_cycles_heavy(graphs::path(4)).verdict, Verdict::skipped);
  // K2,6: every induced K1,4 has leaves of degree 2, and 2 + 2 < 8
  EXPECT_EQ(check_longest_cycles_heavy(graphs::complete_bipartite(2, 6)).verdict, Verdict::skipped);
}

TEST(Attachments, Examples) {
  const Graph k23 = graphs::complete_bipartite(2, 3);
  EXPECT_EQ(check_attachments(k23, Cycle::validated(k23, {0, 2, 1, 3})).verdict, Verdict::confirmed);
  const Graph pet = graphs::petersen();
  const auto c9 = exact_solver().longest_cycle(pet);
  ASSERT_TRUE(c9);
  EXPECT_EQ(check_attachments(pet, *c9).verdict, Verdict::confirmed);
  const Graph k4 = graphs::complete(4);
  EXPECT_EQ(check_attachments(k4, Cycle::validated(k4, {0, 1, 2, 3})).verdict, Verdict::skipped);
  // An extendable cycle is caught: the triangle in K4 has A = {0,1,2} meeting A+.
  EXPECT_EQ(check_attachments(k4, Cycle::validated(k4, {0, 1, 2})).verdict, Verdict::violated);
  EXPECT_EQ(check_nonextendable_attachments(k4, Cycle::validated(k4, {0, 1, 2})).verdict, Verdict::skipped);
}
