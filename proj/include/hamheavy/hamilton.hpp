#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamheavy/error.hpp"
#include "hamheavy/graph.hpp"
#include "hamheavy/heavy.hpp"
#include "hamheavy/patterns.hpp"

// Exact cycle searches. Everything is deterministic: vertices are tried in a
// fixed order, so repeated runs return the same cycle.

namespace hamheavy {

/// Constraints for a cycle search: the cycle uses only `allowed` vertices,
/// contains every `required` vertex and has at least `min_len` vertices.
struct CycleQuery {
  VertexSet allowed;
  VertexSet required;
  int min_len = 3;
};

namespace detail {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, const CycleQuery& q, long budget = 0) : g_(g), q_(q), budget_(budget) {}

  std::optional<Cycle> find() {
    if (!q_.required.subset_of(q_.allowed)) return std::nullopt;
    const int room = q_.allowed.size();
    if (room < std::max(3, q_.min_len)) return std::nullopt;
    if (!q_.required.empty()) {
      if (run_from(q_.required.first(), q_.allowed)) return Cycle::unchecked(path_);
      return std::nullopt;
    }
    // The cycle is found from its least vertex.
    for (Vertex s : q_.allowed) {
      VertexSet allowed_s = q_.allowed - VertexSet::range(s);
      if (allowed_s.size() < std::max(3, q_.min_len)) break;
      if (run_from(s, allowed_s)) return Cycle::unchecked(path_);
    }
    return std::nullopt;
  }

  /// Longest cycle within `allowed` (ignores `required` and `min_len`).
  std::optional<Cycle> longest() {
    best_.clear();
    for (Vertex s : q_.allowed) {
      VertexSet allowed_s = q_.allowed - VertexSet::range(s);
      if (allowed_s.size() <= static_cast<int>(best_.size())) break;
      start_ = s;
      allowed_ = allowed_s;
      path_.assign(1, s);
      on_path_ = VertexSet::single(s);
      maximise(s);
    }
    if (best_.size() < 3) return std::nullopt;
    return Cycle::unchecked(best_);
  }

  long nodes() const { return nodes_; }
  /// True when find() gave up because the node budget ran out.
  bool exhausted() const { return exhausted_; }

 private:
  bool run_from(Vertex s, VertexSet allowed) {
    start_ = s;
    allowed_ = allowed;
    path_.assign(1, s);
    on_path_ = VertexSet::single(s);
    return extend(s);
  }

  bool extend(Vertex end) {
    if (budget_ > 0 && ++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && len >= q_.min_len && g_.adjacent(end, start_) && q_.required.subset_of(on_path_)) {
      return true;
    }
    const VertexSet free = allowed_ - on_path_;
    const VertexSet reach = reachable(g_, end, free) - VertexSet::single(end);
    if (reach.empty()) return false;
    if (!(q_.required - on_path_).subset_of(reach)) return false;
    if (len + reach.size() < q_.min_len) return false;
    if (!g_.neighbors(start_).intersects(reach)) return false;
    const VertexSet ends = free | VertexSet::single(end) | VertexSet::single(start_);
    for (Vertex v : q_.required - on_path_) {
      if ((g_.neighbors(v) & ends).size() < 2) return false;
    }

    for (Vertex w : ordered_candidates(end, free)) {
      path_.push_back(w);
      on_path_.insert(w);
      if (extend(w)) return true;
      path_.pop_back();
      on_path_.erase(w);
    }
    return false;
  }

  void maximise(Vertex end) {
    ++nodes_;
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && len > static_cast<int>(best_.size()) && g_.adjacent(end, start_)) best_ = path_;
    const VertexSet free = allowed_ - on_path_;
    const VertexSet reach = reachable(g_, end, free) - VertexSet::single(end);
    if (len + reach.size() <= static_cast<int>(best_.size())) return;
    if (!g_.neighbors(start_).intersects(reach)) return;
    for (Vertex w : ordered_candidates(end, free)) {
      path_.push_back(w);
      on_path_.insert(w);
      maximise(w);
      path_.pop_back();
      on_path_.erase(w);
      if (static_cast<int>(best_.size()) == allowed_.size()) return;
    }
  }

  // Fewest onward options first, ties by vertex index.
  std::vector<Vertex> ordered_candidates(Vertex end, VertexSet free) const {
    std::vector<Vertex> c = (g_.neighbors(end) & free).to_vector();
    std::stable_sort(c.begin(), c.end(), [&](Vertex a, Vertex b) {
      return (g_.neighbors(a) & free).size() < (g_.neighbors(b) & free).size();
    });
    return c;
  }

  const Graph& g_;
  CycleQuery q_;
  Vertex start_ = 0;
  VertexSet allowed_;
  std::vector<Vertex> path_;
  VertexSet on_path_;
  std::vector<Vertex> best_;
  long budget_ = 0;
  long nodes_ = 0;
  bool exhausted_ = false;
};

inline constexpr int kSubsetDpMaxOrder = 24;

// Held-Karp over subsets of V - {0}: reach[m] holds the endpoints v of
// paths from 0 whose interior-plus-end vertex set is exactly m.
inline std::optional<Cycle> hamilton_by_subsets(const Graph& g) {
  const int n = g.order();
  if (n < 3 || n > kSubsetDpMaxOrder) return std::nullopt;
  const int k = n - 1;  // vertex v >= 1 maps to bit v-1
  const std::uint32_t full = (1U << k) - 1;
  std::vector<std::uint32_t> reach(std::size_t{1} << k, 0);
  auto nb = [&](Vertex v) { return static_cast<std::uint32_t>(g.row(v) >> 1) & full; };
  for (Vertex v : g.neighbors(0) - VertexSet::single(0)) reach[1U << (v - 1)] |= 1U << (v - 1);
  for (std::uint32_t m = 1; m <= full; ++m) {
    for (std::uint32_t ends = reach[m]; ends; ends &= ends - 1) {
      const Vertex v = std::countr_zero(ends) + 1;
      for (std::uint32_t next = nb(v) & ~m; next; next &= next - 1) {
        const std::uint32_t b = next & (~next + 1);
        reach[m | b] |= b;
      }
    }
  }
  std::uint32_t closing = reach[full] & nb(0);
  if (!closing) return std::nullopt;
  std::vector<Vertex> seq;
  std::uint32_t m = full;
  Vertex v = std::countr_zero(closing) + 1;
  while (true) {
    seq.push_back(v);
    const std::uint32_t prev_m = m & ~(1U << (v - 1));
    if (prev_m == 0) break;
    const std::uint32_t prev = reach[prev_m] & nb(v);
    v = std::countr_zero(prev) + 1;
    m = prev_m;
  }
  seq.push_back(0);
  std::reverse(seq.begin(), seq.end());
  return Cycle::unchecked(seq);
}

inline Cycle checked(const Graph& g, const Cycle& c) {
  if (!is_cycle_in(g, c.vertices())) throw InvariantViolation("solver produced an invalid cycle");
  return c;
}

}  // namespace detail

/// Node budget after which the Hamiltonicity search switches to subset DP.
inline constexpr long kBacktrackBudget = 2'000'000;

/// A cycle satisfying q, or none. Exact.
inline std::optional<Cycle> find_cycle(const Graph& g, const CycleQuery& q) {
  detail::CycleSearch s(g, q);
  auto c = s.find();
  if (c) return detail::checked(g, *c);
  return std::nullopt;
}

/// A Hamilton cycle of g, or none. Exact.
inline std::optional<Cycle> hamilton_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 2) return std::nullopt;
  if (!is_2connected(g)) return std::nullopt;
  const CycleQuery q{g.vertices(), g.vertices(), n};
  if (n > detail::kSubsetDpMaxOrder) return find_cycle(g, q);
  // Backtracking first; bounded so dense adversarial cases fall back to DP.
  detail::CycleSearch s(g, q, kBacktrackBudget);
  auto c = s.find();
  if (c) return detail::checked(g, *c);
  if (!s.exhausted()) return std::nullopt;
  c = detail::hamilton_by_subsets(g);
  if (c) return detail::checked(g, *c);
  return std::nullopt;
}

inline bool is_hamiltonian(const Graph& g) { return hamilton_cycle(g).has_value(); }

/// A cycle containing every vertex of s, or none. Extra vertices are allowed.
inline std::optional<Cycle> cycle_through_set(const Graph& g, VertexSet s) {
  if (s.size() < 3) throw PreconditionError("cycle_through_set needs at least 3 vertices");
  return find_cycle(g, CycleQuery{g.vertices(), s, 3});
}

inline std::optional<Cycle> longest_cycle_in(const Graph& g, VertexSet allowed) {
  if (auto h = find_cycle(g, CycleQuery{allowed, allowed, allowed.size()})) return h;
  detail::CycleSearch s(g, CycleQuery{allowed, VertexSet{}, 3});
  auto c = s.longest();
  if (c) return detail::checked(g, *c);
  return std::nullopt;
}

/// Visits every cycle of exactly `len` vertices once (least vertex first,
/// second vertex smaller than the last). visit returns false to stop.
template <class Visit>
void for_each_cycle(const Graph& g, int len, Visit&& visit) {
  if (len < 3) return;
  std::vector<Vertex> path;
  bool stop = false;
  auto dfs = [&](auto& self, VertexSet allowed, VertexSet on) -> void {
    const Vertex end = path.back();
    if (static_cast<int>(path.size()) == len) {
      if (g.adjacent(end, path.front()) && path[1] < path.back()) {
        if (!visit(Cycle::unchecked(path))) stop = true;
      }
      return;
    }
    for (Vertex w : g.neighbors(end) & allowed - on) {
      path.push_back(w);
      self(self, allowed, on | VertexSet::single(w));
      path.pop_back();
      if (stop) return;
    }
  };
  for (Vertex s = 0; s < g.order() && !stop; ++s) {
    VertexSet allowed = g.vertices() - VertexSet::range(s + 1);
    if (allowed.size() + 1 < len) break;
    path.assign(1, s);
    dfs(dfs, allowed, VertexSet::single(s));
  }
}

inline bool is_nonextendable(const Graph& g, const Cycle& c) {
  if (!is_cycle_in(g, c.vertices())) throw PreconditionError("not a cycle of the graph");
  return !find_cycle(g, CycleQuery{g.vertices(), c.vertex_set(), c.length() + 1}).has_value();
}

inline bool is_heavy_cycle(const Graph& g, const Cycle& c) {
  if (!is_cycle_in(g, c.vertices())) throw PreconditionError("not a cycle of the graph");
  return heavy_vertices(g).subset_of(c.vertex_set());
}

struct Attachment {
  VertexSet component;
  VertexSet attachments;  // N_C(H)
};

struct LongestCycleInfo {
  Cycle cycle;
  int length = 0;
  bool heavy = false;
  std::vector<Attachment> components;
};

inline std::vector<Attachment> attachments(const Graph& g, const Cycle& c) {
  std::vector<Attachment> out;
  const VertexSet on = c.vertex_set();
  for (VertexSet h : components(g, g.vertices() - on)) {
    VertexSet a;
    for (Vertex v : h) a |= g.neighbors(v) & on;
    out.push_back({h, a});
  }
  return out;
}

/// Searches over cycles, overridable so harness self-tests can inject faults.
class CycleSolver {
 public:
  virtual ~CycleSolver() = default;
  virtual std::optional<Cycle> longest_cycle(const Graph& g) const { return longest_cycle_in(g, g.vertices()); }
  virtual std::optional<Cycle> find_cycle(const Graph& g, const CycleQuery& q) const {
    return hamheavy::find_cycle(g, q);
  }
};

inline const CycleSolver& exact_solver() {
  static const CycleSolver kSolver;
  return kSolver;
}

inline LongestCycleInfo longest_cycle(const Graph& g, const CycleSolver& solver = exact_solver()) {
  auto c = solver.longest_cycle(g);
  if (!c) throw PreconditionError("graph has no cycle");
  LongestCycleInfo info;
  info.cycle = *c;
  info.length = c->length();
  info.heavy = heavy_vertices(g).subset_of(c->vertex_set());
  info.components = attachments(g, *c);
  return info;
}

// ---------------------------------------------------------------------------
// Empirical checks of two classical facts about long cycles.

enum class Verdict { confirmed, violated, skipped };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::violated: return "violated";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

struct LemmaVerdict {
  Verdict verdict = Verdict::skipped;
  std::string detail;
  std::optional<Cycle> cycle;  // offending cycle when violated
};

/// In a 2-connected K14-o-heavy graph every longest cycle holds every heavy
/// vertex. Violation: a heavy vertex h and a cycle as long as the longest
/// one avoiding h.
inline LemmaVerdict check_longest_cycles_heavy(const Graph& g, const CycleSolver& solver = exact_solver()) {
  if (!is_2connected(g)) return {Verdict::skipped, "not 2-connected", std::nullopt};
  static const Pattern kStar4 = patterns::k14();
  if (!is_o_heavy(g, kStar4)) return {Verdict::skipped, "not K14-o-heavy", std::nullopt};
  auto longest = solver.longest_cycle(g);
  if (!longest) return {Verdict::skipped, "no cycle", std::nullopt};
  const int len = longest->length();
  for (Vertex h : heavy_vertices(g)) {
    auto c = solver.find_cycle(g, CycleQuery{g.vertices() - VertexSet::single(h), VertexSet{}, len});
    if (c) {
      return {Verdict::violated, "longest cycle misses heavy vertex " + std::to_string(h), c};
    }
  }
  return {Verdict::confirmed, "", std::nullopt};
}

/// Attachment structure of a nonextendable cycle c: for each component H of
/// G - C with A = N_C(H), A is disjoint from A- and A+, A- and A+ are
/// independent, and pairs inside A- or inside A+ have degree sum < n.
inline LemmaVerdict check_attachments(const Graph& g, const Cycle& c) {
  if (!is_cycle_in(g, c.vertices())) return {Verdict::skipped, "not a cycle", std::nullopt};
  const auto parts = attachments(g, c);
  if (parts.empty()) return {Verdict::skipped, "cycle is Hamiltonian", std::nullopt};
  const int n = g.order();
  auto fail = [&](const std::string& why) { return LemmaVerdict{Verdict::violated, why, c}; };
  for (const Attachment& part : parts) {
    const VertexSet a = part.attachments;
    const VertexSet minus = c.predecessors(a);
    const VertexSet plus = c.successors(a);
    if (a.intersects(minus)) return fail("A meets A-");
    if (a.intersects(plus)) return fail("A meets A+");
    for (const VertexSet side : {minus, plus}) {
      for (Vertex u : side) {
        for (Vertex v : side) {
          if (u >= v) continue;
          if (g.adjacent(u, v)) return fail("adjacent pair " + std::to_string(u) + "," + std::to_string(v));
          if (g.degree(u) + g.degree(v) >= n) {
            return fail("heavy pair " + std::to_string(u) + "," + std::to_string(v));
          }
        }
      }
    }
  }
  return {Verdict::confirmed, "", std::nullopt};
}

inline LemmaVerdict check_nonextendable_attachments(const Graph& g, const Cycle& c,
                                                     const CycleSolver& solver = exact_solver()) {
  if (!is_cycle_in(g, c.vertices())) return {Verdict::skipped, "not a cycle", std::nullopt};
  if (solver.find_cycle(g, CycleQuery{g.vertices(), c.vertex_set(), c.length() + 1})) {
    return {Verdict::skipped, "cycle is extendable", std::nullopt};
  }
  return check_attachments(g, c);
}

}  // namespace hamheavy
