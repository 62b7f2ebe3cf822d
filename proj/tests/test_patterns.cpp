#include <gtest/gtest.h>

#include <set>

#include "hamheavy/genlib.hpp"
#include "hamheavy/patterns.hpp"
#include "oracles.hpp"

using namespace hamheavy;

namespace {

std::set<std::vector<Vertex>> as_set(const std::vector<Embedding>& es) {
  std::set<std::vector<Vertex>> s;
  for (const auto& e : es) s.insert(e.image);
  return s;
}

}  // namespace

TEST(Catalog, NamesOrdersAndEdgeCounts) {
  const auto& cat = catalog();
  ASSERT_EQ(cat.size(), 12U);
  const std::vector<std::string> names{"k13", "p3", "p4", "p5", "p6", "c3", "z1", "z2", "z3", "b", "n", "w"};
  const std::vector<int> orders{4, 3, 4, 5, 6, 3, 4, 5, 6, 5, 6, 6};
  const std::vector<int> sizes{3, 2, 3, 4, 5, 3, 4, 5, 6, 5, 6, 6};
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(cat[i].name, names[i]);
    EXPECT_EQ(cat[i].order(), orders[i]) << names[i];
    EXPECT_EQ(cat[i].graph.size(), sizes[i]) << names[i];
    EXPECT_TRUE(is_connected(cat[i].graph)) << names[i];
  }
}

TEST(Catalog, ShapesByDegreeSequence) {
  auto degrees = [](const Pattern& p) {
    std::multiset<int> d;
    for (Vertex v = 0; v < p.order(); ++v) d.insert(p.graph.degree(v));
    return d;
  };
  EXPECT_EQ(degrees(catalog_pattern("z2")), (std::multiset<int>{1, 2, 2, 2, 3}));
  EXPECT_EQ(degrees(catalog_pattern("b")), (std::multiset<int>{1, 1, 2, 3, 3}));
  EXPECT_EQ(degrees(catalog_pattern("n")), (std::multiset<int>{1, 1, 1, 3, 3, 3}));
  EXPECT_EQ(degrees(catalog_pattern("w")), (std::multiset<int>{1, 1, 2, 2, 3, 3}));
  const Pattern& claw = catalog_pattern("k13");
  ASSERT_TRUE(claw.center.has_value());
  EXPECT_EQ(claw.graph.degree(*claw.center), 3);
  EXPECT_EQ(claw.ends.size(), 3U);
}

TEST(Catalog, DistanceTwoPairs) {
  using P = std::pair<Vertex, Vertex>;
  EXPECT_EQ(catalog_pattern("p4").dist2pairs, (std::vector<P>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(catalog_pattern("c3").dist2pairs.empty());
  for (const Pattern& p : catalog()) {
    for (Vertex u = 0; u < p.order(); ++u)
      for (Vertex v = u + 1; v < p.order(); ++v) {
        const bool listed = std::find(p.dist2pairs.begin(), p.dist2pairs.end(), P{u, v}) != p.dist2pairs.end();
        EXPECT_EQ(listed, oracle::pattern_distance(p.graph, u, v) == 2) << p.name;
      }
  }
}

TEST(Catalog, UnknownNameAndUserPattern) {
  EXPECT_THROW(catalog_pattern("k14"), PreconditionError);
  const Pattern u = user_pattern("square", "Cl");
  EXPECT_EQ(u.name, "user:square");
  EXPECT_EQ(u.dist2pairs.size(), 2U);
  EXPECT_FALSE(u.center.has_value());
}

TEST(Embeddings, SmallExamples) {
  const Pattern& claw = catalog_pattern("k13");
  EXPECT_EQ(find_induced_embeddings(graphs::star(3), claw).size(), 6U);
  EXPECT_TRUE(find_induced_embeddings(graphs::complete(4), claw).empty());
  EXPECT_EQ(find_induced_embeddings(graphs::cycle(6), catalog_pattern("p4")).size(), 12U);
  EXPECT_TRUE(is_free(graphs::cycle(6), claw));
  EXPECT_FALSE(is_free(graphs::complete_bipartite(2, 3), claw));
  EXPECT_TRUE(is_free(graphs::complete(3), catalog_pattern("p3")));
  EXPECT_EQ(find_induced_embeddings(graphs::cycle(6), catalog_pattern("p4"), 5).size(), 5U);
}

TEST(Embeddings, EveryImageIsInduced) {
  const Graph host = graphs::petersen();
  for (const Pattern& p : catalog()) {
    for (const auto& e : find_induced_embeddings(host, p)) {
      std::set<Vertex> distinct(e.image.begin(), e.image.end());
      ASSERT_EQ(distinct.size(), e.image.size());
      for (Vertex a = 0; a < p.order(); ++a)
        for (Vertex b = a + 1; b < p.order(); ++b)
          ASSERT_EQ(p.graph.adjacent(a, b), host.adjacent(e.image[a], e.image[b]));
    }
  }
}

TEST(Embeddings, MatchTupleOracleOnAllGraphsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    enumerate_into(n, Filter::all, [&](const Graph& g) {
      for (const Pattern& p : catalog()) {
        const auto got = find_induced_embeddings(g, p);
        ASSERT_EQ(as_set(got), oracle::embeddings(g, p.graph)) << p.name << " in " << n;
        ASSERT_EQ(got.size(), as_set(got).size());
        ASSERT_EQ(is_free(g, p), got.empty());
      }
    });
  }
}

TEST(Embeddings, CountDivisibleByAutomorphisms) {
  enumerate_into(6, Filter::connected, [](const Graph& g) {
    for (const Pattern& p : catalog()) {
      const std::size_t aut = find_induced_embeddings(p.graph, p).size();
      ASSERT_EQ(find_induced_embeddings(g, p).size() % aut, 0U) << p.name;
    }
  });
}

TEST(Embeddings, PatternDistanceEqualsDistanceInsideTheCopy) {
  enumerate_into(6, Filter::connected, [](const Graph& g) {
    for (const Pattern& p : catalog()) {
      for (const auto& e : find_induced_embeddings(g, p)) {
        const Graph copy = induced(g, VertexSet::of(e.image));
        // induced() relabels by ascending host vertex
        std::vector<Vertex> sorted = e.image;
        std::sort(sorted.begin(), sorted.end());
        auto local = [&](Vertex host) {
          return static_cast<Vertex>(std::lower_bound(sorted.begin(), sorted.end(), host) - sorted.begin());
        };
        for (auto [u, v] : p.dist2pairs) ASSERT_EQ(distance(copy, local(e.image[u]), local(e.image[v])), 2);
      }
    }
  });
}
