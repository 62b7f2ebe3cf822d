#include <gtest/gtest.h>

#include <numeric>

#include "hamheavy/composed.hpp"
#include "hamheavy/genlib.hpp"
#include "oracles.hpp"

using namespace hamheavy;

namespace {

// Composability straight from the definition: any anchor, any move order,
// no memo.
bool composed_oracle(const Graph& g, const std::vector<Vertex>& ord, int center) {
  const int k = center, l = static_cast<int>(ord.size()) - 1 - center;
  auto e = [&](int p, int q) { return g.adjacent(ord[center + p], ord[center + q]); };
  if (!e(-1, 0) || !e(0, 1) || !e(-1, 1)) return false;
  std::function<bool(int, int)> grow = [&](int a, int b) {
    if (a == k && b == l) return true;
    if (a < k && e(-a - 1, -a)) {
      for (int w = -a + 1; w <= b; ++w)
        if (e(-a - 1, w) && grow(a + 1, b)) return true;
    }
    if (b < l && e(b + 1, b)) {
      for (int w = -a; w < b; ++w)
        if (e(b + 1, w) && grow(a, b + 1)) return true;
    }
    return a < k && b < l && e(-a - 1, -a) && e(b + 1, b) && e(-a - 1, b + 1) && grow(a + 1, b + 1);
  };
  return grow(1, 1);
}

bool is_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  return !p.empty();
}

// The three bullets, by permutation search over the segment.
bool good_oracle(const Graph& g, const std::vector<Vertex>& segment, Vertex x, Vertex x1, Vertex x2) {
  const int n = g.order();
  for (int side = 1; side <= 2; ++side) {
    const Vertex xi = side == 1 ? x1 : x2;
    const Vertex xo = side == 1 ? x2 : x1;
    std::vector<Vertex> rest;
    for (Vertex v : segment)
      if (v != xi) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    bool path = false;
    do path = rest.front() == x && rest.back() == xo && is_path(g, rest);
    while (!path && std::next_permutation(rest.begin(), rest.end()));
    if (!path) continue;
    for (Vertex xp : segment) {
      if (xp == xi || oracle::degree(g, xi) + oracle::degree(g, xp) < n) continue;
      std::vector<Vertex> all = segment;
      std::sort(all.begin(), all.end());
      do {
        for (std::size_t cut = 1; cut < all.size(); ++cut) {
          const std::vector<Vertex> a(all.begin(), all.begin() + static_cast<long>(cut));
          const std::vector<Vertex> b(all.begin() + static_cast<long>(cut), all.end());
          if (!is_path(g, a) || !is_path(g, b)) continue;
          const bool origins = (a.front() == x && b.front() == xo) || (a.front() == xo && b.front() == x);
          const bool termini = (a.back() == xp && b.back() == xi) || (a.back() == xi && b.back() == xp);
          if (origins && termini) return true;
        }
      } while (std::next_permutation(all.begin(), all.end()));
    }
  }
  return false;
}

}  // namespace

TEST(Composed, TriangleBase) {
  const Graph k3 = graphs::complete(3);
  const auto cs = is_composed(k3, {0, 1, 2}, 1);
  ASSERT_TRUE(cs);
  EXPECT_TRUE(cs->steps.empty());
  EXPECT_EQ(carrier_hamilton_path(k3, *cs).vertices, (std::vector<Vertex>{1, 2, 0}));
  const DisjointPathPair at_right = spanning_pair(k3, *cs, 1);
  EXPECT_EQ(at_right.first.vertices, (std::vector<Vertex>{1, 0}));
  EXPECT_EQ(at_right.second.vertices, (std::vector<Vertex>{2}));
  const DisjointPathPair at_center = spanning_pair(k3, *cs, 0);
  EXPECT_EQ(at_center.first.vertices, (std::vector<Vertex>{1}));
  EXPECT_EQ(at_center.second.vertices, (std::vector<Vertex>{2, 0}));
  EXPECT_THROW(spanning_pair(k3, *cs, -1), PreconditionError);
}

TEST(Composed, CompleteGraphOneRightExtension) {
  const Graph k4 = graphs::complete(4);
  const auto cs = is_composed(k4, {0, 1, 2, 3}, 1);
  ASSERT_TRUE(cs);
  ASSERT_EQ(cs->steps.size(), 1U);
  EXPECT_EQ(cs->steps[0].kind, Extension::right);
  const Path p = carrier_hamilton_path(k4, *cs);
  EXPECT_EQ(p.vertices.size(), 4U);
  EXPECT_EQ(p.origin(), 1);
  EXPECT_EQ(p.terminus(), 0);
  const DisjointPathPair d = spanning_pair(k4, *cs, 1);
  EXPECT_TRUE(is_spanning_pair(k4, d, VertexSet::range(4), VertexSet::of({1, 3}), VertexSet::of({2, 0})));
}

TEST(Composed, RefusalsAndErrors) {
  EXPECT_FALSE(is_composed(graphs::path(4), {0, 1, 2, 3}, 1));
  EXPECT_FALSE(is_composed(graphs::path(4), {1, 0, 2, 3}, 2));
  EXPECT_THROW(is_composed(graphs::complete(4), {0, 1, 2, 3}, 0), PreconditionError);
  EXPECT_THROW(is_composed(graphs::complete(4), {0, 1, 1, 3}, 1), PreconditionError);
}

TEST(Composed, ExhaustiveAgainstDefinitionUpToSix) {
  long accepted = 0;
  for (int n = 3; n <= 6; ++n) {
    enumerate_into(n, Filter::connected, [&](const Graph& g) {
      std::vector<Vertex> ord(n);
      std::iota(ord.begin(), ord.end(), 0);
      do {
        for (int c = 1; c <= n - 2; ++c) {
          const auto cs = is_composed(g, ord, c);
          ASSERT_EQ(cs.has_value(), composed_oracle(g, ord, c));
          if (!cs) continue;
          ++accepted;
          ASSERT_TRUE(replay_edges(g, *cs));
          const Path p = carrier_hamilton_path(g, *cs);
          ASSERT_EQ(p.vertex_set(), VertexSet::of(ord));
          for (int s = -cs->k() + 1; s <= cs->l(); ++s) {
            const DisjointPathPair d = spanning_pair(g, *cs, s);
            ASSERT_TRUE(is_spanning_pair(g, d, VertexSet::of(ord), VertexSet::of({cs->at(0), cs->at(cs->l())}),
                                         VertexSet::of({cs->at(s), cs->at(-cs->k())})));
          }
          ASSERT_EQ(is_composed(g, ord, c)->steps.size(), cs->steps.size());
        }
      } while (std::next_permutation(ord.begin(), ord.end()));
    });
  }
  EXPECT_GT(accepted, 0);
}

TEST(Composed, ReplayRejectsTamperedSteps) {
  const Graph k4 = graphs::complete(4);
  auto cs = *is_composed(k4, {0, 1, 2, 3}, 1);
  Graph missing = k4;
  missing.remove_edge(2, 3);
  EXPECT_FALSE(replay_edges(missing, cs));
  cs.steps[0].anchor = 2;  // the end vertex itself is not a valid second anchor
  EXPECT_FALSE(replay_edges(k4, cs));
}

TEST(GoodPair, CompleteBipartiteTwoThree) {
  const Graph g = graphs::complete_bipartite(2, 3);
  const Cycle c = Cycle::validated(g, {0, 2, 1, 3});
  const GoodPairResult r = find_good_pair(g, c, 0);
  bool want = false;
  for (int a = 1; a < 4; ++a)
    for (int b = 1; a + b <= 3; ++b) want = want || good_oracle(g, c.segment(c.at(-b), c.at(a)), 0, c.at(a), c.at(-b));
  EXPECT_EQ(r.status == Search::found, want);
  if (r.witness) { EXPECT_TRUE(verify_good_pair(g, *r.witness)); }
}

TEST(GoodPair, LightCycleHasNone) {
  const Graph c5 = graphs::cycle(5);
  EXPECT_EQ(find_good_pair(c5, Cycle::validated(c5, {0, 1, 2, 3, 4}), 0).status, Search::none);
}

TEST(GoodPair, HeavyNeighbourPairIsGood) {
  // cycle neighbours of x that form a heavy pair are x-good
  long seen = 0;
  for (int n = 4; n <= 7; ++n) {
    enumerate_into(n, Filter::two_connected, [&](const Graph& g) {
      for (int len = 4; len <= n; ++len) {
        for_each_cycle(g, len, [&](const Cycle& c) {
          for (Vertex x : c.vertices()) {
            const Vertex prev = c.predecessor(x), next = c.successor(x);
            if (g.adjacent(prev, next) || g.degree(prev) + g.degree(next) < n) continue;
            ++seen;
            EXPECT_TRUE(good_pair_witness(g, c, x, next, prev).has_value());
          }
          return true;
        });
      }
    });
  }
  EXPECT_GT(seen, 0);
}

TEST(GoodPair, WitnessSearchMatchesDefinitionUpToSix) {
  long found = 0;
  for (int n = 4; n <= 6; ++n) {
    enumerate_into(n, Filter::connected, [&](const Graph& g) {
      for (int len = 4; len <= n; ++len) {
        for_each_cycle(g, len, [&](const Cycle& c) {
          for (Vertex x : c.vertices()) {
            const int px = *c.position(x);
            for (int a = 1; a < len; ++a) {
              for (int b = 1; a + b <= len - 1; ++b) {
                const Vertex x1 = c.at(px + a), x2 = c.at(px - b);
                const auto w = good_pair_witness(g, c, x, x1, x2);
                EXPECT_EQ(w.has_value(), good_oracle(g, c.segment(x2, x1), x, x1, x2));
                if (w) {
                  ++found;
                  EXPECT_TRUE(verify_good_pair(g, *w));
                }
              }
            }
          }
          return true;
        });
      }
    });
  }
  EXPECT_GT(found, 0);
}

TEST(GoodPair, OversizedSegmentIsUnknown) {
  const Graph c14 = graphs::cycle(14);
  Cycle c = Cycle::validated(c14, [] {
    std::vector<Vertex> v(14);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }());
  EXPECT_EQ(find_good_pair(c14, c, 0).status, Search::unknown);
  EXPECT_THROW(good_pair_witness(c14, c, 0, 7, 8), CapacityError);
}

TEST(Merge, SkipsWhenOrderingFails) {
  // C6 plus chord 0-3; path 0-3 is the chord.
  Graph g = graphs::cycle(6);
  g.add_edge(0, 3);
  const Cycle c = Cycle::validated(g, {0, 1, 2, 3, 4, 5});
  EXPECT_FALSE(merge_hypotheses_hold(g, c, Path{{0, 3}}, 4, 5, 2, 1));
  EXPECT_TRUE(merge_hypotheses_hold(g, c, Path{{0, 3}}, 1, 5, 2, 4));
  // x1 = y1 and x2 = y2 at the same time
  EXPECT_TRUE(merge_hypotheses_hold(g, c, Path{{0, 3}}, 1, 4, 1, 4));
  EXPECT_FALSE(merge_hypotheses_hold(g, c, Path{{0, 3}}, 3, 4, 1, 4));
}

TEST(Merge, FaultySolverIsCaught) {
  struct Blind : CycleSolver {
    std::optional<Cycle> find_cycle(const Graph&, const CycleQuery&) const override { return std::nullopt; }
  };
  // Find any instance with witnesses on both sides, then check it under both solvers.
  bool tried = false;
  enumerate_into(6, Filter::two_connected, [&](const Graph& g) {
    if (tried) return;
    for (int len = 4; len < 6 && !tried; ++len) {
      for_each_cycle(g, len, [&](const Cycle& c) {
        const VertexSet off = g.vertices() - c.vertex_set();
        for (Vertex x : c.vertices()) {
          for (Vertex m : g.neighbors(x) & off) {
            for (Vertex y : g.neighbors(m) & c.vertex_set()) {
              if (y == x) continue;
              const Path p{{x, m, y}};
              const int px = *c.position(x), t = c.length();
              const int dy = ((*c.position(y) - px) % t + t) % t;
              if (dy < 2 || t - dy < 2) continue;
              auto wx = good_pair_witness(g, c, x, c.at(px + 1), c.at(px - 1));
              auto wy = good_pair_witness(g, c, y, c.at(px + dy + 1), c.at(px + dy - 1));
              if (!wx || !wy) continue;
              EXPECT_EQ(check_merge(g, c, p, *wx, *wy).verdict, Verdict::confirmed);
              EXPECT_EQ(check_merge(g, c, p, *wx, *wy, Blind{}).verdict, Verdict::violated);
              tried = true;
              return false;
            }
          }
        }
        return true;
      });
    }
  });
  EXPECT_TRUE(tried);
}
