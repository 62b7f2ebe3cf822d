#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamheavy/error.hpp"
#include "hamheavy/graph.hpp"
#include "hamheavy/graph6.hpp"

namespace hamheavy {

inline constexpr int kPatternMaxOrder = 16;

/// A small graph searched for as an induced subgraph of a host.
struct Pattern {
  std::string name;  // lowercase CLI token: k13, p4, ..., or user:<id>
  Graph graph;
  /// Unordered pairs {u, v}, u < v, at distance exactly 2 inside the pattern.
  std::vector<std::pair<Vertex, Vertex>> dist2pairs;
  /// Claw roles; empty for every other pattern.
  std::optional<Vertex> center;
  std::vector<Vertex> ends;

  int order() const { return graph.order(); }
};

inline std::vector<std::pair<Vertex, Vertex>> distance_two_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (distance(g, u, v) == 2) out.emplace_back(u, v);
  return out;
}

inline Pattern make_pattern(std::string name, Graph g) {
  if (g.order() < 1 || g.order() > kPatternMaxOrder) {
    throw CapacityError("pattern order must be in [1, " + std::to_string(kPatternMaxOrder) + "]");
  }
  Pattern p;
  p.name = std::move(name);
  p.dist2pairs = distance_two_pairs(g);
  p.graph = std::move(g);
  return p;
}

/// User-supplied pattern from a graph6 line; carries no role markers.
inline Pattern user_pattern(const std::string& id, const std::string& g6) {
  return make_pattern("user:" + id, parse_graph6(g6));
}

namespace patterns {

/// Star with one center (vertex 0) and `leaves` end vertices.
inline Pattern star(int leaves, std::string name) {
  Pattern p = make_pattern(std::move(name), graphs::star(leaves));
  p.center = 0;
  for (Vertex v = 1; v <= leaves; ++v) p.ends.push_back(v);
  return p;
}

inline Pattern k13() { return star(3, "k13"); }
inline Pattern k14() { return star(4, "k14"); }

inline Pattern path(int k) { return make_pattern("p" + std::to_string(k), graphs::path(k)); }

inline Pattern c3() { return make_pattern("c3", graphs::complete(3)); }

/// Triangle {0,1,2} with a pendant path of length i hanging from vertex 2.
inline Pattern z(int i) {
  Graph g(3 + i, {{0, 1}, {1, 2}, {0, 2}});
  Vertex prev = 2;
  for (Vertex v = 3; v < 3 + i; ++v) {
    g.add_edge(prev, v);
    prev = v;
  }
  return make_pattern("z" + std::to_string(i), g);
}

/// Bull: triangle {0,1,2}, pendant 3 at 0, pendant 4 at 1.
inline Pattern bull() { return make_pattern("b", Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}})); }

/// Net: triangle a1=0, a2=1, a3=2 with pendants b1=3, b2=4, b3=5.
inline Pattern net() {
  return make_pattern("n", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}));
}

/// Wounded: triangle a1=0, a2=1, a3=2; pendant edge a2-b2 (b2=3);
/// pendant path a1-b1-c1 (b1=4, c1=5).
inline Pattern wounded() {
  return make_pattern("w", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {0, 4}, {4, 5}}));
}

}  // namespace patterns

/// The twelve named patterns, in a fixed order.
inline const std::vector<Pattern>& catalog() {
  static const std::vector<Pattern> kCatalog = {
      patterns::k13(),  patterns::path(3), patterns::path(4), patterns::path(5),
      patterns::path(6), patterns::c3(),   patterns::z(1),    patterns::z(2),
      patterns::z(3),    patterns::bull(), patterns::net(),   patterns::wounded(),
  };
  return kCatalog;
}

inline const Pattern& catalog_pattern(const std::string& name) {
  for (const Pattern& p : catalog()) {
    if (p.name == name) return p;
  }
  throw PreconditionError("unknown pattern '" + name + "'");
}

inline std::size_t catalog_index(const std::string& name) {
  const auto& cat = catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat[i].name == name) return i;
  }
  throw PreconditionError("unknown pattern '" + name + "'");
}

/// Induced embedding: image[u] is the host vertex of pattern vertex u.
struct Embedding {
  std::vector<Vertex> image;
  bool operator==(const Embedding&) const = default;
  auto operator<=>(const Embedding&) const = default;
};

namespace detail {

// Backtracking search for induced embeddings. Pattern vertices are mapped in
// `order`; candidates for each are narrowed by adjacency and non-adjacency to
// the images already placed. When `low_sum` is set, every pair of
// pattern-nonadjacent vertices must additionally map to a host pair in that
// relation (used to look for copies with no heavy pair).
class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, std::span<const Vertex> order,
          std::span<const VertexSet> allowed, const std::array<VertexSet, Graph::kMaxOrder>* low_sum)
      : host_(host), k_(pattern.order()), low_sum_(low_sum) {
    for (int i = 0; i < k_; ++i) {
      order_[i] = order[static_cast<std::size_t>(i)];
      allowed_[i] = allowed[static_cast<std::size_t>(order_[i])];
      adj_prev_[i] = 0;
      for (int j = 0; j < i; ++j) {
        if (pattern.adjacent(order_[i], order_[j])) adj_prev_[i] |= static_cast<std::uint32_t>(1U << j);
      }
    }
  }

  // visit(image) returns false to stop. Returns false iff stopped early.
  template <class Visit>
  bool run(Visit&& visit) {
    if (k_ == 0) return true;
    std::array<Vertex, kPatternMaxOrder> img{};
    std::vector<Vertex> image(static_cast<std::size_t>(k_));
    return step(0, VertexSet{}, img, image, visit);
  }

 private:
  template <class Visit>
  bool step(int i, VertexSet used, std::array<Vertex, kPatternMaxOrder>& img, std::vector<Vertex>& image,
            Visit& visit) {
    VertexSet cand = allowed_[i] - used;
    for (int j = 0; j < i && !cand.empty(); ++j) {
      if ((adj_prev_[i] >> j) & 1U) {
        cand &= host_.neighbors(img[j]);
      } else {
        cand -= host_.neighbors(img[j]);
        if (low_sum_) cand &= (*low_sum_)[static_cast<std::size_t>(img[j])];
      }
    }
    for (Vertex v : cand) {
      img[i] = v;
      if (i + 1 == k_) {
        for (int t = 0; t < k_; ++t) image[static_cast<std::size_t>(order_[t])] = img[t];
        if (!visit(std::span<const Vertex>(image))) return false;
      } else if (!step(i + 1, used | VertexSet::single(v), img, image, visit)) {
        return false;
      }
    }
    return true;
  }

  const Graph& host_;
  int k_;
  const std::array<VertexSet, Graph::kMaxOrder>* low_sum_;
  std::array<Vertex, kPatternMaxOrder> order_{};
  std::array<VertexSet, kPatternMaxOrder> allowed_{};
  std::array<std::uint32_t, kPatternMaxOrder> adj_prev_{};
};

// Static order: descending pattern degree, ties by index.
inline std::vector<Vertex> degree_order(const Graph& pattern) {
  std::vector<Vertex> order(static_cast<std::size_t>(pattern.order()));
  for (Vertex v = 0; v < pattern.order(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
  return order;
}

// Seeded order: the seeds first, then repeatedly the vertex with the most
// neighbours already ordered (ties: higher degree, then lower index).
inline std::vector<Vertex> seeded_order(const Graph& pattern, std::initializer_list<Vertex> seeds) {
  std::vector<Vertex> order(seeds);
  VertexSet placed = VertexSet::of(seeds);
  while (static_cast<int>(order.size()) < pattern.order()) {
    Vertex best = -1;
    int best_links = -1;
    int best_deg = -1;
    for (Vertex v : pattern.vertices() - placed) {
      int links = (pattern.neighbors(v) & placed).size();
      int deg = pattern.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}

// Host vertices whose degree is at least the pattern degree of each vertex.
inline std::vector<VertexSet> degree_allowed(const Graph& host, const Graph& pattern) {
  std::vector<VertexSet> allowed(static_cast<std::size_t>(pattern.order()));
  for (Vertex u = 0; u < pattern.order(); ++u) {
    VertexSet s;
    for (Vertex v = 0; v < host.order(); ++v) {
      if (host.degree(v) >= pattern.degree(u)) s.insert(v);
    }
    allowed[static_cast<std::size_t>(u)] = s;
  }
  return allowed;
}

}  // namespace detail

inline constexpr std::size_t kAllEmbeddings = std::numeric_limits<std::size_t>::max();

/// Labelled induced embeddings of p into host, up to `limit` of them.
inline std::vector<Embedding> find_induced_embeddings(const Graph& host, const Pattern& p,
                                                      std::size_t limit = kAllEmbeddings) {
  std::vector<Embedding> out;
  if (p.order() > host.order() || limit == 0) return out;
  const auto order = detail::degree_order(p.graph);
  const auto allowed = detail::degree_allowed(host, p.graph);
  detail::Matcher m(host, p.graph, order, allowed, nullptr);
  m.run([&](std::span<const Vertex> image) {
    out.push_back(Embedding{{image.begin(), image.end()}});
    return out.size() < limit;
  });
  return out;
}

inline bool is_free(const Graph& host, const Pattern& p) {
  return find_induced_embeddings(host, p, 1).empty();
}

}  // namespace hamheavy
