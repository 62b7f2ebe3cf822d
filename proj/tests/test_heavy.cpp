#include <gtest/gtest.h>

#include "hamheavy/genlib.hpp"
#include "hamheavy/heavy.hpp"
#include "hamheavy/profile.hpp"
#include "oracles.hpp"

using namespace hamheavy;

namespace {

const Pattern& pat(const char* name) { return catalog_pattern(name); }

}  // namespace

TEST(HeavyReport, Cycles) {
  const HeavyReport c4 = heavy_report(graphs::cycle(4));
  EXPECT_EQ(c4.heavy_vertices.size(), 4);
  EXPECT_EQ(c4.heavy_pairs, (std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 3}}));
  const HeavyReport c5 = heavy_report(graphs::cycle(5));
  EXPECT_TRUE(c5.heavy_vertices.empty());
  EXPECT_TRUE(c5.heavy_pairs.empty());
}

TEST(HeavyReport, CompleteGraph) {
  const HeavyReport k4 = heavy_report(graphs::complete(4));
  EXPECT_EQ(k4.heavy_vertices.size(), 4);
  EXPECT_TRUE(k4.heavy_pairs.empty());
  EXPECT_EQ(k4.heavy_triangles.size(), 4U);
}

TEST(HeavyReport, OddOrderUsesDoubledComparison) {
  // n = 5: degree 2 is not heavy (2 < 2.5), degree 3 is.
  const Graph k23 = graphs::complete_bipartite(2, 3);
  EXPECT_EQ(heavy_vertices(k23), VertexSet::of({0, 1}));
}

TEST(VirtualEdges, Examples) {
  const VirtualEdgeSet c4(graphs::cycle(4));
  EXPECT_EQ(c4.kind(0, 2), EdgeKind::virtual_);
  EXPECT_EQ(c4.kind(1, 3), EdgeKind::virtual_);
  EXPECT_EQ(c4.kind(0, 1), EdgeKind::real);
  EXPECT_TRUE(VirtualEdgeSet(graphs::cycle(5)).virtual_pairs().empty());
  const VirtualEdgeSet k23(graphs::complete_bipartite(2, 3));
  EXPECT_EQ(k23.virtual_pairs(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
  EXPECT_EQ(k23.size(), 7);
}

TEST(VirtualEdges, VirtualPairsAreHeavyPairs) {
  enumerate_into(6, Filter::all, [](const Graph& g) {
    const VirtualEdgeSet ve(g);
    const HeavyReport r = heavy_report(g);
    ASSERT_EQ(ve.virtual_pairs(), r.heavy_pairs);
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = 0; y < g.order(); ++y)
        if (x != y) { ASSERT_EQ(ve.contains(x, y), g.adjacent(x, y) || g.degree(x) + g.degree(y) >= g.order()); }
  });
}

TEST(OHeavy, Examples) {
  EXPECT_TRUE(is_o_heavy(graphs::complete_bipartite(3, 3), pat("k13")));
  EXPECT_FALSE(is_o_heavy(graphs::complete_bipartite(2, 3), pat("k13")));
  for (const Pattern& p : catalog())
    if (p.name != "c3" && p.name != "p3") { EXPECT_TRUE(is_o_heavy(graphs::complete(5), p)) << p.name; }
}

TEST(FHeavy, Examples) {
  EXPECT_FALSE(is_f_heavy(graphs::cycle(6), pat("p4")));
  EXPECT_TRUE(is_f_heavy(graphs::complete_bipartite(3, 3), pat("k13")));
  EXPECT_TRUE(is_f_heavy(graphs::petersen(), pat("c3")));
}

TEST(FHeavy, ViolationsAreGenuine) {
  enumerate_into(6, Filter::connected, [](const Graph& g) {
    for (const Pattern& p : catalog()) {
      if (auto e = find_f_violation(g, p)) {
        bool bad_pair = false;
        for (auto [u, v] : p.dist2pairs)
          if (2 * std::max(g.degree(e->image[u]), g.degree(e->image[v])) < g.order()) bad_pair = true;
        ASSERT_TRUE(bad_pair) << p.name;
      }
      if (auto e = find_o_violation(g, p)) {
        for (Vertex a = 0; a < p.order(); ++a)
          for (Vertex b = a + 1; b < p.order(); ++b)
            if (!p.graph.adjacent(a, b)) { ASSERT_LT(g.degree(e->image[a]) + g.degree(e->image[b]), g.order()); }
      }
    }
  });
}

TEST(Predicates, MatchDefinitionOracleUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    enumerate_into(n, Filter::all, [](const Graph& g) {
      for (const Pattern& p : catalog()) {
        const PatternStatus s = evaluate(g, p);
        const oracle::Status want = oracle::status(g, p.graph);
        ASSERT_EQ(s.free, want.free) << p.name;
        ASSERT_EQ(s.o_heavy, want.o_heavy) << p.name;
        ASSERT_EQ(s.f_heavy, want.f_heavy) << p.name;
      }
    });
  }
}

TEST(Predicates, FreeImpliesBothHeavy) {
  enumerate_into(7, Filter::two_connected, [](const Graph& g) {
    for (const Pattern& p : catalog()) {
      const PatternStatus s = evaluate(g, p);
      if (s.free) { ASSERT_TRUE(s.o_heavy && s.f_heavy); }
    }
  });
}

TEST(Predicates, OHeavyMonotoneUnderInducedSubpatterns) {
  const std::vector<std::pair<const char*, const char*>> pairs{{"z1", "b"}, {"z1", "n"}, {"b", "n"}, {"z2", "w"}};
  for (int n = 4; n <= 7; ++n) {
    enumerate_into(n, Filter::all, [&](const Graph& g) {
      for (auto [sub, super] : pairs)
        if (is_o_heavy(g, pat(sub))) { ASSERT_TRUE(is_o_heavy(g, pat(super))) << sub << " " << super << " " << n; }
    });
  }
}

TEST(Predicates, TriangleAlwaysFHeavy) {
  for (int n = 3; n <= 7; ++n)
    enumerate_into(n, Filter::all, [](const Graph& g) { ASSERT_TRUE(is_f_heavy(g, pat("c3"))); });
}

TEST(Predicates, OreImpliesFan) {
  enumerate_into(7, Filter::all, [](const Graph& g) {
    if (satisfies_ore(g)) { ASSERT_TRUE(satisfies_fan(g)); }
  });
}

TEST(Profile, NamedGraphs) {
  const ConditionProfile k4 = profile(graphs::complete(4));
  EXPECT_TRUE(k4.hamiltonian);
  EXPECT_FALSE(k4[Pat::c3].free);
  EXPECT_TRUE(k4[Pat::k13].free);
  const ConditionProfile c6 = profile(graphs::cycle(6));
  EXPECT_TRUE(c6[Pat::k13].free);
  EXPECT_FALSE(c6[Pat::p4].f_heavy);
  EXPECT_TRUE(c6[Pat::c3].f_heavy);
  EXPECT_TRUE(c6.hamiltonian);
  EXPECT_TRUE(c6.two_connected);
  const ConditionProfile pet = profile(graphs::petersen());
  EXPECT_FALSE(pet[Pat::k13].free);
  EXPECT_FALSE(pet.hamiltonian);
  EXPECT_EQ(pet.g6, "IheA@GUAo");
}

TEST(Profile, BruteModeAgreesWithFastMode) {
  enumerate_into(7, Filter::two_connected, [](const Graph& g) {
    ProfileCache fast(g), slow(g, Evaluation::brute);
    for (std::size_t i = 0; i < kCatalogSize; ++i) {
      const Pat p = static_cast<Pat>(i);
      ASSERT_EQ(fast.status(p), slow.status(p));
    }
    ASSERT_EQ(fast.hamiltonian(), slow.hamiltonian());
  });
}
