#include <gtest/gtest.h>

#include "hamheavy/genlib.hpp"
#include "hamheavy/harness.hpp"
#include "hamheavy/ocycle.hpp"

using namespace hamheavy;

namespace {

// Every o-cycle of g with least vertex first and seq[1] < seq.back().
template <class Visit>
void for_each_ocycle(const Graph& g, Visit&& visit) {
  const VirtualEdgeSet ve(g);
  std::vector<Vertex> seq;
  auto dfs = [&](auto& self, VertexSet used) -> void {
    if (seq.size() >= 3 && ve.contains(seq.back(), seq.front()) && seq[1] < seq.back()) visit(seq);
    for (Vertex w : ve.closure_neighbors(seq.back()) - used) {
      if (w < seq.front()) continue;
      seq.push_back(w);
      self(self, used | VertexSet::single(w));
      seq.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    seq.assign(1, s);
    dfs(dfs, VertexSet::single(s));
  }
}

void check_realization(const Graph& g, const OCycle& oc, const Realization& r) {
  ASSERT_TRUE(is_cycle_in(g, r.cycle.vertices()));
  ASSERT_TRUE(oc.vertex_set().subset_of(r.cycle.vertex_set()));
  int virt = oc.virtual_count();
  VertexSet covered = oc.vertex_set();
  for (const RealizeStep& st : r.trace) {
    ASSERT_LT(st.virtual_after, virt);
    ASSERT_TRUE(covered.subset_of(VertexSet::of(st.result)));
    virt = st.virtual_after;
    covered = VertexSet::of(st.result);
  }
}

}  // namespace

TEST(ValidateOCycle, Examples) {
  const Graph c4 = graphs::cycle(4);
  const OCycle plain = validate_ocycle(c4, {0, 1, 2, 3});
  EXPECT_EQ(plain.virtual_count(), 0);
  const OCycle crossed = validate_ocycle(c4, {0, 2, 1, 3});
  EXPECT_EQ(crossed.kinds, (std::vector<EdgeKind>{EdgeKind::virtual_, EdgeKind::real, EdgeKind::virtual_,
                                                  EdgeKind::real}));
  EXPECT_THROW(validate_ocycle(graphs::cycle(5), {0, 2, 4}), PreconditionError);
  EXPECT_THROW(validate_ocycle(c4, {0, 1, 0}), PreconditionError);
  EXPECT_THROW(validate_ocycle(c4, {0, 1}), PreconditionError);
  EXPECT_THROW(validate_ocycle(c4, {0, 1, 7}), PreconditionError);
}

TEST(ClosureCount, Examples) {
  EXPECT_EQ(ore_closure_edge_count(graphs::cycle(4)), 6);
  EXPECT_EQ(ore_closure_edge_count(graphs::cycle(5)), 5);
  EXPECT_EQ(ore_closure_edge_count(graphs::complete_bipartite(2, 3)), 7);
}

TEST(Realize, AllRealIsUnchanged) {
  const Graph g = graphs::cycle(6);
  const OCycle oc = validate_ocycle(g, {0, 1, 2, 3, 4, 5});
  const Realization r = realize(g, oc);
  EXPECT_EQ(r.cycle.vertices(), oc.seq);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_TRUE(r.fast_path);
}

TEST(Realize, CompleteBipartiteTwoThree) {
  // parts {0,1} (degree 3) and {2,3,4}; 0-1 is a heavy pair
  const Graph g = graphs::complete_bipartite(2, 3);
  const OCycle oc = validate_ocycle(g, {0, 2, 1});
  const Realization r = realize(g, oc);
  EXPECT_EQ(r.cycle.length(), 4);
  check_realization(g, oc, r);
  ASSERT_EQ(r.trace.size(), 1U);
  EXPECT_EQ(r.trace[0].kind, RealizeStep::Kind::insert);
}

TEST(Realize, SquareWithBothDiagonals) {
  const Graph g = graphs::cycle(4);
  const OCycle oc = validate_ocycle(g, {0, 2, 1, 3});
  const Realization r = realize(g, oc);
  EXPECT_EQ(r.cycle.vertex_set(), VertexSet::range(4));
  check_realization(g, oc, r);
}

TEST(Realize, EveryOCycleOfEveryGraphUpToSeven) {
  long instances = 0, fallback = 0;
  for (int n = 3; n <= 7; ++n) {
    enumerate_into(n, Filter::all, [&](const Graph& g) {
      for_each_ocycle(g, [&](const std::vector<Vertex>& seq) {
        const OCycle oc = validate_ocycle(g, seq);
        const Realization r = realize(g, oc);
        ++instances;
        if (!r.fast_path) ++fallback;
        check_realization(g, oc, r);
        ASSERT_TRUE(cycle_through_set(g, oc.vertex_set()).has_value());
      });
    });
  }
  EXPECT_GT(instances, 100000);
  EXPECT_EQ(fallback, 0);
}

TEST(Realize, RandomInstancesReportCoverage) {
  const RealizeStats st = realize_random(300, 5);
  EXPECT_EQ(st.instances, 300);
  EXPECT_EQ(st.failures, 0);
  EXPECT_GT(st.with_virtual, 0);
  EXPECT_EQ(st.fast_path + st.fallback, st.instances);
  EXPECT_DOUBLE_EQ(st.coverage(), static_cast<double>(st.fast_path) / st.instances);
}

TEST(Realize, Deterministic) {
  const RealizeStats a = realize_random(100, 9);
  const RealizeStats b = realize_random(100, 9);
  EXPECT_EQ(a.steps, b.steps);
  EXPECT_EQ(a.with_virtual, b.with_virtual);
}
