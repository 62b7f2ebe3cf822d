#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamheavy/error.hpp"
#include "hamheavy/graph.hpp"
#include "hamheavy/hamilton.hpp"

// Composed graphs: a triangle grown by one-vertex and two-vertex extensions
// at the ends of an interval v_-k .. v_0 .. v_l. The extension history is
// kept as a certificate from which spanning paths and path pairs are derived.

namespace hamheavy {

/// Two vertex-disjoint paths; a path may be a single vertex.
struct DisjointPathPair {
  Path first;
  Path second;
};

enum class Extension { left, right, both };

inline std::string to_string(Extension e) {
  switch (e) {
    case Extension::left: return "left";
    case Extension::right: return "right";
    case Extension::both: return "both";
  }
  return "?";
}

struct ExtensionStep {
  Extension kind = Extension::left;
  /// Second attachment of a one-vertex extension (position), unused for `both`.
  int anchor = 0;
  int left = 0;   // interval after the step is [-left, right]
  int right = 0;
};

/// Ordering v_-k..v_l with the step list that builds the carrier.
struct CanonicalSequence {
  std::vector<Vertex> ordering;
  int center = 0;  // index of v_0 in ordering
  std::vector<ExtensionStep> steps;

  int k() const { return center; }
  int l() const { return static_cast<int>(ordering.size()) - 1 - center; }
  Vertex at(int pos) const { return ordering[static_cast<std::size_t>(center + pos)]; }
};

namespace detail {

class ComposedSearch {
 public:
  ComposedSearch(const Graph& g, const std::vector<Vertex>& ord, int center)
      : g_(g), ord_(ord), center_(center), k_(center), l_(static_cast<int>(ord.size()) - 1 - center) {}

  std::optional<std::vector<ExtensionStep>> run() {
    if (!edge(-1, 0) || !edge(0, 1) || !edge(-1, 1)) return std::nullopt;
    dead_.assign(static_cast<std::size_t>((k_ + 1) * (l_ + 1)), 0);
    std::vector<ExtensionStep> steps;
    if (dfs(1, 1, steps)) return steps;
    return std::nullopt;
  }

  // Lowest position w in [-a, b], w != end, adjacent to `z`.
  std::optional<int> anchor(int a, int b, int end, int z) const {
    for (int w = -a; w <= b; ++w) {
      if (w != end && edge(w, z)) return w;
    }
    return std::nullopt;
  }

 private:
  bool edge(int p, int q) const {
    return g_.adjacent(ord_[static_cast<std::size_t>(center_ + p)], ord_[static_cast<std::size_t>(center_ + q)]);
  }

  bool dfs(int a, int b, std::vector<ExtensionStep>& steps) {
    if (a == k_ && b == l_) return true;
    std::uint8_t& dead = dead_[static_cast<std::size_t>(a * (l_ + 1) + b)];
    if (dead) return false;
    if (a < k_ && edge(-a - 1, -a)) {
      if (auto w = anchor(a, b, -a, -a - 1)) {
        steps.push_back({Extension::left, *w, a + 1, b});
        if (dfs(a + 1, b, steps)) return true;
        steps.pop_back();
      }
    }
    if (b < l_ && edge(b + 1, b)) {
      if (auto w = anchor(a, b, b, b + 1)) {
        steps.push_back({Extension::right, *w, a, b + 1});
        if (dfs(a, b + 1, steps)) return true;
        steps.pop_back();
      }
    }
    if (a < k_ && b < l_ && edge(-a - 1, -a) && edge(b + 1, b) && edge(-a - 1, b + 1)) {
      steps.push_back({Extension::both, 0, a + 1, b + 1});
      if (dfs(a + 1, b + 1, steps)) return true;
      steps.pop_back();
    }
    dead = 1;
    return false;
  }

  const Graph& g_;
  const std::vector<Vertex>& ord_;
  int center_, k_, l_;
  std::vector<std::uint8_t> dead_;
};

}  // namespace detail

/// Recognises whether g is composed along `ordering` (x first, z last, the
/// vertex at `center` as y). Exact over all extension histories.
inline std::optional<CanonicalSequence> is_composed(const Graph& g, const std::vector<Vertex>& ordering,
                                                    int center) {
  const int len = static_cast<int>(ordering.size());
  if (center < 1 || center > len - 2) throw PreconditionError("center must have a vertex on each side");
  VertexSet seen;
  for (Vertex v : ordering) {
    if (v < 0 || v >= g.order() || seen.contains(v)) throw PreconditionError("ordering must list distinct vertices");
    seen.insert(v);
  }
  auto steps = detail::ComposedSearch(g, ordering, center).run();
  if (!steps) return std::nullopt;
  return CanonicalSequence{ordering, center, std::move(*steps)};
}

namespace detail {

// Positional paths (vertex = position in the interval) for the four facts
// maintained by induction over the extension steps, with L = -a, R = b:
//   to_left:        Hamilton path 0 -> L
//   to_right:       Hamilton path 0 -> R
//   pair_left[s]:   spanning pair, first path from 0, second from R, ending
//                   at {s, L} in some order (s != L)
//   pair_right[s]:  spanning pair, first from 0, second from L, ending at
//                   {s, R} (s != R)
using Seq = std::vector<int>;
using SeqPair = std::pair<Seq, Seq>;

struct Facts {
  int a = 1;
  int b = 1;
  Seq to_left, to_right;
  std::map<int, SeqPair> pair_left, pair_right;
};

inline Seq negate(Seq s) {
  for (int& v : s) v = -v;
  return s;
}

inline Facts mirror(const Facts& f) {
  Facts m;
  m.a = f.b;
  m.b = f.a;
  m.to_left = negate(f.to_right);
  m.to_right = negate(f.to_left);
  for (const auto& [s, pr] : f.pair_right) m.pair_left[-s] = {negate(pr.first), negate(pr.second)};
  for (const auto& [s, pl] : f.pair_left) m.pair_right[-s] = {negate(pl.first), negate(pl.second)};
  return m;
}

inline Facts triangle() {
  Facts f;
  f.to_left = {0, 1, -1};
  f.to_right = {0, -1, 1};
  f.pair_left[0] = {{0}, {1, -1}};
  f.pair_left[1] = {{0, -1}, {1}};
  f.pair_right[0] = {{0}, {-1, 1}};
  f.pair_right[-1] = {{0, 1}, {-1}};
  return f;
}

inline Seq concat(Seq a, const Seq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Seq reversed(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

// New vertex z = L - 1 joined to L and to w (w in the interval, w != L).
inline Facts extend_left(const Facts& f, int w) {
  const int L = -f.a;
  const int z = L - 1;
  Facts n;
  n.a = f.a + 1;
  n.b = f.b;
  n.to_left = concat(f.to_left, {z});
  {
    const SeqPair& p = f.pair_left.at(w);
    n.to_right = concat(concat(p.first, {z}), reversed(p.second));
  }
  for (int s = L; s <= f.b; ++s) {
    SeqPair p = f.pair_left.at(s == L ? w : s);
    const int ext = s == L ? w : L;  // the terminus that z follows
    if (p.first.back() == ext) p.first.push_back(z); else p.second.push_back(z);
    n.pair_left[s] = std::move(p);
  }
  n.pair_right[z] = {f.to_right, {z}};
  for (const auto& [s, p] : f.pair_right) n.pair_right[s] = {p.first, concat({z}, p.second)};
  return n;
}

// The left half (to_left, pair_left) after adding x' = L - 1 and y' = R + 1.
inline void extend_both_left_half(const Facts& f, Facts& n) {
  const int L = -f.a;
  const int R = f.b;
  const int xp = L - 1;
  const int yp = R + 1;
  n.to_left = concat(f.to_right, {yp, xp});
  n.pair_left.clear();
  n.pair_left[yp] = {concat(f.to_left, {xp}), {yp}};
  n.pair_left[L] = {f.to_left, {yp, xp}};
  for (const auto& [s, p] : f.pair_left) {
    if (p.first.back() == s) {
      n.pair_left[s] = {p.first, concat(concat({yp}, p.second), {xp})};
    } else {
      n.pair_left[s] = {concat(p.first, {xp}), concat({yp}, p.second)};
    }
  }
}

inline Facts extend_both(const Facts& f) {
  Facts n;
  n.a = f.a + 1;
  n.b = f.b + 1;
  extend_both_left_half(f, n);
  Facts m;
  m.a = n.b;
  m.b = n.a;
  extend_both_left_half(mirror(f), m);
  const Facts back = mirror(m);
  n.to_right = back.to_right;
  n.pair_right = back.pair_right;
  return n;
}

inline Facts replay(const CanonicalSequence& cs) {
  Facts f = triangle();
  for (const ExtensionStep& st : cs.steps) {
    switch (st.kind) {
      case Extension::left: f = extend_left(f, st.anchor); break;
      case Extension::right: f = mirror(extend_left(mirror(f), -st.anchor)); break;
      case Extension::both: f = extend_both(f); break;
    }
  }
  return f;
}

inline Path to_path(const CanonicalSequence& cs, const Seq& s) {
  Path p;
  for (int pos : s) p.vertices.push_back(cs.at(pos));
  return p;
}

}  // namespace detail

/// Re-checks every edge the step list relies on.
inline bool replay_edges(const Graph& g, const CanonicalSequence& cs) {
  auto e = [&](int p, int q) { return g.adjacent(cs.at(p), cs.at(q)); };
  if (!e(-1, 0) || !e(0, 1) || !e(-1, 1)) return false;
  int a = 1, b = 1;
  for (const ExtensionStep& st : cs.steps) {
    switch (st.kind) {
      case Extension::left:
        if (a >= cs.k() || st.anchor < -a || st.anchor > b || st.anchor == -a) return false;
        if (!e(-a - 1, -a) || !e(-a - 1, st.anchor)) return false;
        ++a;
        break;
      case Extension::right:
        if (b >= cs.l() || st.anchor < -a || st.anchor > b || st.anchor == b) return false;
        if (!e(b + 1, b) || !e(b + 1, st.anchor)) return false;
        ++b;
        break;
      case Extension::both:
        if (a >= cs.k() || b >= cs.l()) return false;
        if (!e(-a - 1, -a) || !e(b + 1, b) || !e(-a - 1, b + 1)) return false;
        ++a;
        ++b;
        break;
    }
    if (st.left != a || st.right != b) return false;
  }
  return a == cs.k() && b == cs.l();
}

/// Hamilton (v_0, v_-k)-path of the carrier.
inline Path carrier_hamilton_path(const Graph& g, const CanonicalSequence& cs) {
  const auto f = detail::replay(cs);
  Path p = detail::to_path(cs, f.to_left);
  if (!is_path_in(g, p.vertices) || p.vertices.size() != cs.ordering.size() ||
      p.origin() != cs.at(0) || p.terminus() != cs.at(-cs.k())) {
    throw InvariantViolation("carrier path failed validation");
  }
  return p;
}

inline bool is_spanning_pair(const Graph& g, const DisjointPathPair& d, VertexSet span, VertexSet origins,
                             VertexSet termini) {
  if (!is_path_in(g, d.first.vertices) || !is_path_in(g, d.second.vertices)) return false;
  const VertexSet a = d.first.vertex_set();
  const VertexSet b = d.second.vertex_set();
  if (a.intersects(b) || (a | b) != span) return false;
  if ((VertexSet::single(d.first.origin()) | VertexSet::single(d.second.origin())) != origins) return false;
  return (VertexSet::single(d.first.terminus()) | VertexSet::single(d.second.terminus())) == termini;
}

/// Spanning (v_0 v_l, v_s v_-k)-pair of the carrier; s is a position != -k.
inline DisjointPathPair spanning_pair(const Graph& g, const CanonicalSequence& cs, int s) {
  if (s == -cs.k()) throw PreconditionError("v_s must differ from v_-k");
  if (s < -cs.k() || s > cs.l()) throw PreconditionError("position outside the ordering");
  const auto f = detail::replay(cs);
  const auto& sp = f.pair_left.at(s);
  DisjointPathPair d{detail::to_path(cs, sp.first), detail::to_path(cs, sp.second)};
  const VertexSet span = VertexSet::of(cs.ordering);
  const VertexSet origins = VertexSet::of({cs.at(0), cs.at(cs.l())});
  const VertexSet termini = VertexSet::of({cs.at(s), cs.at(-cs.k())});
  if (!is_spanning_pair(g, d, span, origins, termini)) throw InvariantViolation("spanning pair failed validation");
  return d;
}

// ---------------------------------------------------------------------------
// Good pairs on a cycle.

inline constexpr int kGoodPairMaxSegment = 12;

struct GoodPairWitness {
  Cycle cycle;
  Vertex x = 0, x1 = 0, x2 = 0;
  int side = 1;  // i: x_i takes part in the degree-sum certificate
  Vertex x_prime = 0;
  Path p_prime;          // (x, x_{3-i})-path on V(P) - {x_i}
  DisjointPathPair d;    // (x x_{3-i}, x' x_i)-pair on V(P)
  std::vector<Vertex> segment;  // P, from x2 through x to x1
};

enum class Search { found, none, unknown };

struct GoodPairResult {
  Search status = Search::none;
  std::optional<GoodPairWitness> witness;
};

namespace detail {

// Paths inside a segment of at most 12 vertices, by subset DP. ends[s][m]
// holds, as local bits, the endpoints of paths from s covering exactly m.
class SegmentPaths {
 public:
  SegmentPaths(const Graph& g, const std::vector<Vertex>& seg) : seg_(seg), k_(static_cast<int>(seg.size())) {
    adj_.fill(0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j)
        if (g.adjacent(seg[static_cast<std::size_t>(i)], seg[static_cast<std::size_t>(j)])) adj_[i] |= 1U << j;
    ends_.assign(static_cast<std::size_t>(k_), {});
  }

  int local(Vertex v) const {
    for (int i = 0; i < k_; ++i)
      if (seg_[static_cast<std::size_t>(i)] == v) return i;
    return -1;
  }
  std::uint32_t full() const { return (1U << k_) - 1; }

  std::uint32_t ends(int s, std::uint32_t m) {
    table(s);
    return ends_[static_cast<std::size_t>(s)][m];
  }

  Path path(int s, std::uint32_t m, int end) {
    table(s);
    std::vector<Vertex> rev;
    while (true) {
      rev.push_back(seg_[static_cast<std::size_t>(end)]);
      const std::uint32_t prev_m = m & ~(1U << end);
      if (prev_m == 0) break;
      const std::uint32_t prev = ends_[static_cast<std::size_t>(s)][prev_m] & adj_[end];
      end = std::countr_zero(prev);
      m = prev_m;
    }
    return Path{{rev.rbegin(), rev.rend()}};
  }

 private:
  void table(int s) {
    auto& t = ends_[static_cast<std::size_t>(s)];
    if (!t.empty()) return;
    t.assign(std::size_t{1} << k_, 0);
    t[1U << s] = 1U << s;
    for (std::uint32_t m = 1; m <= full(); ++m) {
      for (std::uint32_t e = t[m]; e; e &= e - 1) {
        const int v = std::countr_zero(e);
        for (std::uint32_t nx = adj_[v] & ~m; nx; nx &= nx - 1) {
          const std::uint32_t bit = nx & (~nx + 1);
          t[m | bit] |= bit;
        }
      }
    }
  }

  const std::vector<Vertex>& seg_;
  int k_;
  std::array<std::uint32_t, 16> adj_{};
  std::vector<std::vector<std::uint16_t>> ends_;
};

// A spanning pair with origins (o1, o2) and termini {t1, t2} in local bits.
inline std::optional<DisjointPathPair> segment_pair(SegmentPaths& sp, int o1, int o2, int t1, int t2) {
  const std::uint32_t full = sp.full();
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (!((m >> o1) & 1U) || ((m >> o2) & 1U)) continue;
    const std::uint32_t rest = full & ~m;
    const std::uint32_t e1 = sp.ends(o1, m);
    const std::uint32_t e2 = sp.ends(o2, rest);
    if (((e1 >> t1) & 1U) && ((e2 >> t2) & 1U)) {
      return DisjointPathPair{sp.path(o1, m, t1), sp.path(o2, rest, t2)};
    }
    if (((e1 >> t2) & 1U) && ((e2 >> t1) & 1U)) {
      return DisjointPathPair{sp.path(o1, m, t2), sp.path(o2, rest, t1)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Tests one candidate (x1, x2) around x; the segment runs x2 -> x -> x1
/// along the orientation of c.
inline std::optional<GoodPairWitness> good_pair_witness(const Graph& g, const Cycle& c, Vertex x, Vertex x1,
                                                        Vertex x2) {
  if (x1 == x2 || x1 == x || x2 == x) return std::nullopt;
  std::vector<Vertex> seg = c.segment(x2, x1);
  if (std::find(seg.begin(), seg.end(), x) == seg.end()) return std::nullopt;
  if (static_cast<int>(seg.size()) > kGoodPairMaxSegment) {
    throw CapacityError("good-pair segment exceeds " + std::to_string(kGoodPairMaxSegment) + " vertices");
  }
  detail::SegmentPaths sp(g, seg);
  const int n = g.order();
  const int lx = sp.local(x);
  for (int side = 1; side <= 2; ++side) {
    const Vertex xi = side == 1 ? x1 : x2;
    const Vertex xo = side == 1 ? x2 : x1;
    const int li = sp.local(xi);
    const int lo = sp.local(xo);
    const std::uint32_t without_i = sp.full() & ~(1U << li);
    if (!((sp.ends(lx, without_i) >> lo) & 1U)) continue;
    for (Vertex xp : seg) {
      if (xp == xi || g.degree(xi) + g.degree(xp) < n) continue;
      auto d = detail::segment_pair(sp, lx, lo, sp.local(xp), li);
      if (!d) continue;
      GoodPairWitness w;
      w.cycle = c;
      w.x = x;
      w.x1 = x1;
      w.x2 = x2;
      w.side = side;
      w.x_prime = xp;
      w.p_prime = sp.path(lx, without_i, lo);
      w.d = std::move(*d);
      w.segment = seg;
      return w;
    }
  }
  return std::nullopt;
}

/// Re-checks all three conditions of a witness against g.
inline bool verify_good_pair(const Graph& g, const GoodPairWitness& w) {
  if (!is_cycle_in(g, w.cycle.vertices())) return false;
  if (w.segment != w.cycle.segment(w.x2, w.x1)) return false;
  if (w.x == w.x1 || w.x == w.x2 || w.x1 == w.x2) return false;
  const VertexSet p = VertexSet::of(w.segment);
  if (!p.contains(w.x)) return false;
  const Vertex xi = w.side == 1 ? w.x1 : w.x2;
  const Vertex xo = w.side == 1 ? w.x2 : w.x1;
  if (w.x_prime == xi || !p.contains(w.x_prime)) return false;
  if (g.degree(xi) + g.degree(w.x_prime) < g.order()) return false;
  if (!is_path_in(g, w.p_prime.vertices) || w.p_prime.origin() != w.x || w.p_prime.terminus() != xo) return false;
  if (w.p_prime.vertex_set() != p - VertexSet::single(xi) ||
      w.p_prime.vertices.size() != static_cast<std::size_t>(p.size() - 1)) {
    return false;
  }
  return is_spanning_pair(g, w.d, p, VertexSet::of({w.x, xo}), VertexSet::of({w.x_prime, xi}));
}

/// First x-good pair on c by increasing segment size, then increasing
/// forward distance of x1; `unknown` when only oversized segments remain.
inline GoodPairResult find_good_pair(const Graph& g, const Cycle& c, Vertex x) {
  if (!c.contains(x)) throw PreconditionError("x is not on the cycle");
  const int t = c.length();
  if (t < 4) throw PreconditionError("good pairs need a cycle of length at least 4");
  const int px = *c.position(x);
  for (int sum = 2; sum <= t - 1; ++sum) {
    if (sum + 1 > kGoodPairMaxSegment) return {Search::unknown, std::nullopt};
    for (int a = 1; a < sum; ++a) {
      const Vertex x1 = c.at(px + a);
      const Vertex x2 = c.at(px - (sum - a));
      if (auto w = good_pair_witness(g, c, x, x1, x2)) return {Search::found, std::move(w)};
    }
  }
  return {Search::none, std::nullopt};
}

/// Hypotheses of the cycle-merging fact: x2, x, x1, y1, y, y2 in this order
/// along c (x1 = y1 or x2 = y2 allowed), p an (x, y)-path internally
/// disjoint from c.
inline bool merge_hypotheses_hold(const Graph& g, const Cycle& c, const Path& p, Vertex x1, Vertex x2, Vertex y1,
                                  Vertex y2) {
  if (!is_path_in(g, p.vertices) || p.vertices.size() < 2) return false;
  const Vertex x = p.origin();
  const Vertex y = p.terminus();
  if (!c.contains(x) || !c.contains(y) || x == y) return false;
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
    if (c.contains(p.vertices[i])) return false;
  for (Vertex v : {x1, x2, y1, y2})
    if (!c.contains(v) || v == x || v == y) return false;
  const int t = c.length();
  const int base = *c.position(x2);
  auto off = [&](Vertex v) { return ((*c.position(v) - base) % t + t) % t; };
  const int oy2 = off(y2) == 0 ? t : off(y2);
  return 0 < off(x) && off(x) < off(x1) && off(x1) <= off(y1) && off(y1) < off(y) && off(y) < oy2;
}

struct MergeVerdict {
  Verdict verdict = Verdict::skipped;
  std::string detail;
  std::optional<Cycle> cycle;
};

/// With good pairs on both sides of an attached path, some cycle covers
/// V(c) and V(p). Violation means no such cycle exists.
inline MergeVerdict check_merge(const Graph& g, const Cycle& c, const Path& p, const GoodPairWitness& wx,
                                const GoodPairWitness& wy, const CycleSolver& solver = exact_solver()) {
  if (!(wx.cycle == c) || !(wy.cycle == c)) return {Verdict::skipped, "witness for another cycle", std::nullopt};
  if (wx.x != p.origin() || wy.x != p.terminus()) return {Verdict::skipped, "witness for another vertex", std::nullopt};
  // The segment of y's pair runs y1 -> y -> y2, so y1 sits in the x2 slot.
  if (!merge_hypotheses_hold(g, c, p, wx.x1, wx.x2, wy.x2, wy.x1)) {
    return {Verdict::skipped, "ordering hypothesis fails", std::nullopt};
  }
  if (!verify_good_pair(g, wx) || !verify_good_pair(g, wy)) {
    return {Verdict::skipped, "witness does not verify", std::nullopt};
  }
  const VertexSet need = c.vertex_set() | p.vertex_set();
  auto cover = solver.find_cycle(g, CycleQuery{g.vertices(), need, 3});
  if (!cover) return {Verdict::violated, "no cycle covers V(C) and V(P)", std::nullopt};
  return {Verdict::confirmed, "", cover};
}

}  // namespace hamheavy
