#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hamheavy/error.hpp"
#include "hamheavy/graph.hpp"
#include "hamheavy/hamilton.hpp"
#include "hamheavy/heavy.hpp"

// Ore-cycles: cyclic vertex sequences whose consecutive pairs are edges or
// heavy pairs, and their conversion into genuine cycles.

namespace hamheavy {

struct OCycle {
  std::vector<Vertex> seq;
  /// kinds[i] describes the pair (seq[i], seq[i+1 mod t]).
  std::vector<EdgeKind> kinds;

  int length() const { return static_cast<int>(seq.size()); }
  int virtual_count() const {
    return static_cast<int>(std::count(kinds.begin(), kinds.end(), EdgeKind::virtual_));
  }
  VertexSet vertex_set() const { return VertexSet::of(seq); }
};

inline OCycle validate_ocycle(const Graph& g, const std::vector<Vertex>& seq) {
  const int t = static_cast<int>(seq.size());
  if (t < 3) throw PreconditionError("an o-cycle needs at least 3 vertices");
  VertexSet seen;
  for (Vertex v : seq) {
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (seen.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " repeated");
    seen.insert(v);
  }
  const VirtualEdgeSet ve(g);
  OCycle oc{seq, {}};
  for (int i = 0; i < t; ++i) {
    const Vertex a = seq[static_cast<std::size_t>(i)];
    const Vertex b = seq[static_cast<std::size_t>((i + 1) % t)];
    const EdgeKind k = ve.kind(a, b);
    if (k == EdgeKind::none) {
      throw PreconditionError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                              ") is neither an edge nor a heavy pair");
    }
    oc.kinds.push_back(k);
  }
  return oc;
}

inline int ore_closure_edge_count(const Graph& g) { return VirtualEdgeSet(g).size(); }

/// One rewiring of the working o-cycle that removes the virtual pair (x, y).
struct RealizeStep {
  enum class Kind { insert, exchange } kind = Kind::exchange;
  Vertex x = 0;
  Vertex y = 0;
  /// insert: the new common neighbour; exchange: the pair (a, b) replaced by
  /// the crossing edges x-b and y-a.
  Vertex z = -1;
  Vertex a = -1;
  Vertex b = -1;
  std::vector<Vertex> result;
  int virtual_after = 0;
};

struct Realization {
  Cycle cycle;
  bool fast_path = true;
  std::vector<RealizeStep> trace;
};

namespace detail {

inline std::vector<EdgeKind> kinds_of(const Graph& g, const std::vector<Vertex>& seq) {
  std::vector<EdgeKind> k;
  const std::size_t t = seq.size();
  for (std::size_t i = 0; i < t; ++i) {
    const Vertex a = seq[i];
    const Vertex b = seq[(i + 1) % t];
    k.push_back(g.adjacent(a, b) ? EdgeKind::real : EdgeKind::virtual_);
  }
  return k;
}

// Rewires the lowest-index virtual pair. The path p (x = p[0], y = p.back())
// is the o-cycle with the pair removed. A crossing j (x ~ p[j+1], y ~ p[j])
// closes p into an o-cycle without the pair; failing that, a common
// neighbour outside the o-cycle is spliced in.
inline std::optional<RealizeStep> rewire(const Graph& g, const std::vector<Vertex>& seq,
                                         const std::vector<EdgeKind>& kinds) {
  const int t = static_cast<int>(seq.size());
  int i = 0;
  while (i < t && kinds[static_cast<std::size_t>(i)] != EdgeKind::virtual_) ++i;
  if (i == t) return std::nullopt;
  // p runs from x = seq[i] backwards around the cycle to y = seq[i+1].
  std::vector<Vertex> p;
  for (int k = 0; k < t; ++k) p.push_back(seq[static_cast<std::size_t>(((i - k) % t + t) % t)]);
  const Vertex x = p.front();
  const Vertex y = p.back();

  RealizeStep step;
  step.kind = RealizeStep::Kind::exchange;
  step.x = x;
  step.y = y;
  for (int j = 1; j + 1 < t - 1; ++j) {
    const Vertex a = p[static_cast<std::size_t>(j)];
    const Vertex b = p[static_cast<std::size_t>(j + 1)];
    if (g.adjacent(x, b) && g.adjacent(y, a)) {
      step.a = a;
      step.b = b;
      // x .. a, y, p[t-2] .. b, back to x.
      step.result.assign(p.begin(), p.begin() + j + 1);
      for (int k = t - 1; k > j; --k) step.result.push_back(p[static_cast<std::size_t>(k)]);
      return step;
    }
  }
  const VertexSet outside = g.vertices() - VertexSet::of(seq);
  const VertexSet common = g.neighbors(x) & g.neighbors(y) & outside;
  if (!common.empty()) {
    step.kind = RealizeStep::Kind::insert;
    step.z = common.first();
    step.result = p;
    step.result.push_back(step.z);
    return step;
  }
  return std::nullopt;
}

}  // namespace detail

/// A cycle of g containing every vertex of oc. Each fast-path step removes
/// at least one virtual pair; the exact search is the fallback.
inline Realization realize(const Graph& g, const OCycle& oc) {
  Realization r;
  std::vector<Vertex> seq = oc.seq;
  std::vector<EdgeKind> kinds = detail::kinds_of(g, seq);
  int virt = static_cast<int>(std::count(kinds.begin(), kinds.end(), EdgeKind::virtual_));
  while (virt > 0) {
    auto step = detail::rewire(g, seq, kinds);
    if (!step) break;
    seq = step->result;
    kinds = detail::kinds_of(g, seq);
    const int after = static_cast<int>(std::count(kinds.begin(), kinds.end(), EdgeKind::virtual_));
    if (after >= virt) throw InvariantViolation("rewiring did not remove a virtual pair");
    step->virtual_after = after;
    virt = after;
    r.trace.push_back(std::move(*step));
  }
  if (virt == 0) {
    r.cycle = detail::checked(g, Cycle::unchecked(seq));
  } else {
    r.fast_path = false;
    auto c = cycle_through_set(g, oc.vertex_set());
    if (!c) throw InvariantViolation("no cycle covers a valid o-cycle");
    r.cycle = *c;
  }
  if (!oc.vertex_set().subset_of(r.cycle.vertex_set())) {
    throw InvariantViolation("realized cycle misses o-cycle vertices");
  }
  return r;
}

}  // namespace hamheavy
