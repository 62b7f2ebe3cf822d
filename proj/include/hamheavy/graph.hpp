#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamheavy/error.hpp"

namespace hamheavy {

using Vertex = int;

/// A set of vertices of a graph with at most 64 vertices, one bit per vertex.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
  /// The set {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static VertexSet of(std::span<const Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices [0, n), n <= 64, stored as bit rows.
///
/// Value type. Mutators exist for builders and generators; graphs handed
/// between modules are treated as immutable.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder) {
      throw CapacityError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
  }
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }
  int size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex v) const { return VertexSet{rows_[v]}; }
  std::uint64_t row(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }

  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }

  /// Copy of this graph with one new vertex n joined to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const {
    Graph h(n_ + 1);
    h.rows_ = rows_;
    for (Vertex u : nbrs) h.add_edge(u, n_);
    return h;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : VertexSet{rows_[u] & ~((std::uint64_t{2} << u) - 1)}) out.emplace_back(u, v);
    }
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
      throw PreconditionError("invalid edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " for order " + std::to_string(n_));
    }
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      h ^= g.row(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// ---------------------------------------------------------------------------
// Paths and cycles

/// A path given by its vertex sequence; a single vertex is a path of length 0.
struct Path {
  std::vector<Vertex> vertices;

  Vertex origin() const { return vertices.front(); }
  Vertex terminus() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }
  bool operator==(const Path&) const = default;
};

/// True iff `seq` is a nonempty sequence of distinct vertices of g with
/// consecutive vertices adjacent.
inline bool is_path_in(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex v = seq[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
  }
  return true;
}

inline bool is_cycle_in(const Graph& g, std::span<const Vertex> seq) {
  return seq.size() >= 3 && is_path_in(g, seq) && g.adjacent(seq.back(), seq.front());
}

/// An oriented cycle: vertices listed in the direction of travel.
class Cycle {
 public:
  Cycle() = default;

  /// Builds a cycle after checking it against g.
  static Cycle validated(const Graph& g, std::vector<Vertex> seq) {
    if (!is_cycle_in(g, seq)) throw PreconditionError("sequence is not a cycle of the graph");
    return Cycle(std::move(seq));
  }
  /// Builds a cycle without checking adjacency; callers must validate.
  static Cycle unchecked(std::vector<Vertex> seq) { return Cycle(std::move(seq)); }

  const std::vector<Vertex>& vertices() const { return seq_; }
  int length() const { return static_cast<int>(seq_.size()); }
  VertexSet vertex_set() const { return VertexSet::of(seq_); }
  bool contains(Vertex v) const { return position(v).has_value(); }

  std::optional<int> position(Vertex v) const {
    auto it = std::find(seq_.begin(), seq_.end(), v);
    if (it == seq_.end()) return std::nullopt;
    return static_cast<int>(it - seq_.begin());
  }
  Vertex at(int pos) const {
    int len = length();
    return seq_[static_cast<std::size_t>(((pos % len) + len) % len)];
  }
  /// x^+ : the successor of x along the orientation.
  Vertex successor(Vertex x) const { return at(checked_position(x) + 1); }
  /// x^- : the predecessor of x along the orientation.
  Vertex predecessor(Vertex x) const { return at(checked_position(x) - 1); }

  VertexSet successors(VertexSet a) const {
    VertexSet out;
    for (Vertex x : a) out.insert(successor(x));
    return out;
  }
  VertexSet predecessors(VertexSet a) const {
    VertexSet out;
    for (Vertex x : a) out.insert(predecessor(x));
    return out;
  }

  /// Vertices from u to v following the orientation, both inclusive.
  std::vector<Vertex> segment(Vertex u, Vertex v) const {
    std::vector<Vertex> out;
    int i = checked_position(u);
    for (;;) {
      Vertex w = at(i++);
      out.push_back(w);
      if (w == v) break;
    }
    return out;
  }

  Cycle reversed() const {
    std::vector<Vertex> r(seq_.rbegin(), seq_.rend());
    return Cycle(std::move(r));
  }

  bool operator==(const Cycle&) const = default;

 private:
  explicit Cycle(std::vector<Vertex> seq) : seq_(std::move(seq)) {}

  int checked_position(Vertex v) const {
    auto p = position(v);
    if (!p) throw PreconditionError("vertex " + std::to_string(v) + " not on cycle");
    return *p;
  }

  std::vector<Vertex> seq_;
};

// ---------------------------------------------------------------------------
// Structural queries

/// Subgraph induced by s, relabelled to [0, |s|) in increasing vertex order.
inline Graph induced(const Graph& g, VertexSet s) {
  if (s.empty()) throw PreconditionError("induced subgraph of an empty vertex set");
  if (!s.subset_of(g.vertices())) throw PreconditionError("vertex set exceeds graph order");
  std::array<int, Graph::kMaxOrder> index{};
  int k = 0;
  for (Vertex v : s) index[static_cast<std::size_t>(v)] = k++;
  Graph h(k);
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u) & s) {
      if (u < v) h.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    }
  }
  return h;
}

/// Vertices reachable from `from` using only vertices of `within`.
/// `from` itself is included whether or not it lies in `within`.
inline VertexSet reachable(const Graph& g, Vertex from, VertexSet within) {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline constexpr int kUnreachable = -1;

/// Hop distance between u and v, or kUnreachable.
inline int distance(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return 0;
  VertexSet seen = VertexSet::single(u);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (Vertex w : frontier) next |= g.neighbors(w);
    next -= seen;
    if (next.contains(v)) return d;
    seen |= next;
    frontier = next;
  }
  return kUnreachable;
}

inline bool is_connected_within(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return reachable(g, s.first(), s) == s;
}

inline bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

/// Connected components of g[s], each as a vertex set, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  while (!s.empty()) {
    VertexSet c = reachable(g, s.first(), s);
    out.push_back(c);
    s -= c;
  }
  return out;
}

/// n >= 3, connected, and no cut vertex. Checked by deleting each vertex in
/// turn and testing connectivity of the rest.
inline bool is_2connected(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  const VertexSet all = g.vertices();
  if (!is_connected_within(g, all)) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_connected_within(g, all - VertexSet::single(v))) return false;
  }
  return true;
}

/// Applies a relabelling: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Named graphs

namespace graphs {

inline Graph empty(int n) { return Graph(n); }

inline Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

}  // namespace graphs

}  // namespace hamheavy
