#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hamheavy/error.hpp"
#include "hamheavy/graph.hpp"
#include "hamheavy/heavy.hpp"
#include "hamheavy/patterns.hpp"

// Slow reference evaluations with no pruning, used to re-check anything the
// harness is about to report.

namespace hamheavy::brute {

inline constexpr int kMaxHamiltonOrder = 11;

/// Hamiltonicity by trying every vertex order that starts at 0.
inline bool hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  if (n > kMaxHamiltonOrder) throw CapacityError("brute-force Hamiltonicity is limited to 11 vertices");
  std::vector<Vertex> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (perm.front() > perm.back()) continue;  // each cycle once per direction
    bool ok = g.adjacent(0, perm.front()) && g.adjacent(perm.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every injective tuple of host vertices that induces the pattern.
inline std::vector<Embedding> embeddings(const Graph& host, const Pattern& p) {
  const int k = p.order();
  const int n = host.order();
  std::vector<Embedding> out;
  if (k > n) return out;
  std::vector<Vertex> img(static_cast<std::size_t>(k));
  auto rec = [&](auto& self, int i, VertexSet used) -> void {
    if (i == k) {
      for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v)
          if (p.graph.adjacent(u, v) != host.adjacent(img[static_cast<std::size_t>(u)], img[static_cast<std::size_t>(v)]))
            return;
      out.push_back(Embedding{img});
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used.contains(v)) continue;
      img[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, used | VertexSet::single(v));
    }
  };
  rec(rec, 0, VertexSet{});
  return out;
}

inline PatternStatus status(const Graph& g, const Pattern& p) {
  const int n = g.order();
  const auto embs = embeddings(g, p);
  PatternStatus s{embs.empty(), true, true};
  for (const Embedding& e : embs) {
    auto deg = [&](Vertex u) { return g.degree(e.image[static_cast<std::size_t>(u)]); };
    bool some_heavy_pair = false;
    for (Vertex u = 0; u < p.order(); ++u)
      for (Vertex v = u + 1; v < p.order(); ++v)
        if (!p.graph.adjacent(u, v) && deg(u) + deg(v) >= n) some_heavy_pair = true;
    if (!some_heavy_pair) s.o_heavy = false;
    for (Vertex u = 0; u < p.order(); ++u)
      for (Vertex v = u + 1; v < p.order(); ++v)
        if (distance(p.graph, u, v) == 2 && 2 * std::max(deg(u), deg(v)) < n) s.f_heavy = false;
  }
  return s;
}

}  // namespace hamheavy::brute
