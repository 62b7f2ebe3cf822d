#pragma once

#include <array>
#include <tuple>
#include <utility>
#include <vector>

#include "hamheavy/graph.hpp"
#include "hamheavy/patterns.hpp"

// Degree-condition predicates. Half-integer thresholds are compared doubled:
// "d(v) >= n/2" is 2*d(v) >= n throughout.

namespace hamheavy {

inline bool is_heavy_vertex(const Graph& g, Vertex v) { return 2 * g.degree(v) >= g.order(); }

inline VertexSet heavy_vertices(const Graph& g) {
  VertexSet s;
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_heavy_vertex(g, v)) s.insert(v);
  return s;
}

inline bool is_heavy_pair(const Graph& g, Vertex x, Vertex y) {
  return x != y && !g.adjacent(x, y) && g.degree(x) + g.degree(y) >= g.order();
}

struct HeavyReport {
  int n = 0;
  VertexSet heavy_vertices;
  std::vector<std::pair<Vertex, Vertex>> heavy_pairs;
  std::vector<std::array<Vertex, 3>> heavy_triangles;
};

inline HeavyReport heavy_report(const Graph& g) {
  HeavyReport r;
  r.n = g.order();
  r.heavy_vertices = heavy_vertices(g);
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (is_heavy_pair(g, x, y)) r.heavy_pairs.emplace_back(x, y);
  for (Vertex a : r.heavy_vertices)
    for (Vertex b : r.heavy_vertices & g.neighbors(a))
      if (b > a)
        for (Vertex c : r.heavy_vertices & g.neighbors(a) & g.neighbors(b))
          if (c > b) r.heavy_triangles.push_back({a, b, c});
  return r;
}

enum class EdgeKind { none, real, virtual_ };

/// The relation E~(G): real edges plus nonadjacent pairs with degree sum >= n.
class VirtualEdgeSet {
 public:
  explicit VirtualEdgeSet(const Graph& g) : n_(g.order()) {
    for (Vertex x = 0; x < n_; ++x) {
      real_[x] = g.neighbors(x);
      for (Vertex y = 0; y < n_; ++y)
        if (is_heavy_pair(g, x, y)) virt_[x].insert(y);
    }
  }

  int order() const { return n_; }
  EdgeKind kind(Vertex x, Vertex y) const {
    if (real_[x].contains(y)) return EdgeKind::real;
    if (virt_[x].contains(y)) return EdgeKind::virtual_;
    return EdgeKind::none;
  }
  bool contains(Vertex x, Vertex y) const { return kind(x, y) != EdgeKind::none; }
  VertexSet virtual_neighbors(Vertex x) const { return virt_[x]; }
  VertexSet closure_neighbors(Vertex x) const { return real_[x] | virt_[x]; }

  std::vector<std::pair<Vertex, Vertex>> virtual_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex x = 0; x < n_; ++x)
      for (Vertex y : virt_[x])
        if (y > x) out.emplace_back(x, y);
    return out;
  }
  /// |E~(G)| as unordered pairs.
  int size() const {
    int twice = 0;
    for (Vertex x = 0; x < n_; ++x) twice += (real_[x] | virt_[x]).size();
    return twice / 2;
  }

 private:
  int n_;
  std::array<VertexSet, Graph::kMaxOrder> real_{};
  std::array<VertexSet, Graph::kMaxOrder> virt_{};
};

inline VirtualEdgeSet virtual_edges(const Graph& g) { return VirtualEdgeSet(g); }

namespace detail {

inline std::array<VertexSet, Graph::kMaxOrder> low_sum_sets(const Graph& g) {
  std::array<VertexSet, Graph::kMaxOrder> low{};
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = 0; y < g.order(); ++y)
      if (g.degree(x) + g.degree(y) < g.order()) low[x].insert(y);
  return low;
}

inline VertexSet light_vertices(const Graph& g) { return g.vertices() - heavy_vertices(g); }

}  // namespace detail

/// An induced copy of p in which no pattern-nonadjacent pair has degree sum >= n.
inline std::optional<Embedding> find_o_violation(const Graph& g, const Pattern& p) {
  if (p.order() > g.order()) return std::nullopt;
  const auto low = detail::low_sum_sets(g);
  const auto order = detail::degree_order(p.graph);
  const auto allowed = detail::degree_allowed(g, p.graph);
  std::optional<Embedding> found;
  detail::Matcher m(g, p.graph, order, allowed, &low);
  m.run([&](std::span<const Vertex> image) {
    found = Embedding{{image.begin(), image.end()}};
    return false;
  });
  return found;
}

/// An induced copy of p with a pattern distance-2 pair mapped to two light vertices.
inline std::optional<Embedding> find_f_violation(const Graph& g, const Pattern& p) {
  if (p.order() > g.order() || p.dist2pairs.empty()) return std::nullopt;
  const VertexSet light = detail::light_vertices(g);
  if (light.size() < 2) return std::nullopt;
  const auto base = detail::degree_allowed(g, p.graph);
  for (auto [a, b] : p.dist2pairs) {
    auto allowed = base;
    allowed[static_cast<std::size_t>(a)] &= light;
    allowed[static_cast<std::size_t>(b)] &= light;
    if (allowed[static_cast<std::size_t>(a)].empty() || allowed[static_cast<std::size_t>(b)].empty()) continue;
    const auto order = detail::seeded_order(p.graph, {a, b});
    std::optional<Embedding> found;
    detail::Matcher m(g, p.graph, order, allowed, nullptr);
    m.run([&](std::span<const Vertex> image) {
      found = Embedding{{image.begin(), image.end()}};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

inline bool is_o_heavy(const Graph& g, const Pattern& p) { return !find_o_violation(g, p).has_value(); }
inline bool is_f_heavy(const Graph& g, const Pattern& p) { return !find_f_violation(g, p).has_value(); }

struct PatternStatus {
  bool free = false;
  bool o_heavy = false;
  bool f_heavy = false;
  bool operator==(const PatternStatus&) const = default;
};

inline PatternStatus evaluate(const Graph& g, const Pattern& p) {
  PatternStatus s;
  s.free = is_free(g, p);
  s.o_heavy = s.free || is_o_heavy(g, p);
  s.f_heavy = s.free || is_f_heavy(g, p);
  return s;
}

}  // namespace hamheavy
