#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hamheavy/error.hpp"
#include "hamheavy/graph.hpp"

// Canonical labelling for small graphs by individualisation and refinement.
//
// Each node of the search tree is an ordered partition of the vertices that
// is equitable (every vertex of a cell has the same number of neighbours in
// every cell). Leaves are discrete partitions, i.e. labellings; the
// canonical labelling is the leaf whose relabelled adjacency matrix is
// lexicographically largest. Subtrees are pruned with automorphisms
// discovered when two leaves produce the same matrix.

namespace hamheavy {

inline constexpr int kCanonMaxOrder = 12;

/// Canonically relabelled graph: equal for two graphs iff they are isomorphic.
struct CanonicalForm {
  Graph graph;
  bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept { return GraphHash{}(f.graph); }
};

struct Labelling {
  /// labelling[i] is the vertex placed at canonical position i.
  std::vector<Vertex> labelling;
  /// orbit[v] is the least vertex in v's orbit under Aut(g).
  std::vector<Vertex> orbit;
  /// Automorphisms found during the search; they generate Aut(g).
  std::vector<std::vector<Vertex>> generators;
  CanonicalForm form;
};

namespace detail {

class CanonSearch {
 public:
  static constexpr int kCap = 16;
  using Perm = std::array<std::uint8_t, kCap>;
  using Rows = std::array<std::uint16_t, kCap>;

  explicit CanonSearch(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = static_cast<std::uint16_t>(g.row(v));
  }

  Labelling run() {
    Partition root;
    root.count = 0;
    if (n_ > 0) {
      root.cells[0] = static_cast<std::uint16_t>((1U << n_) - 1);
      root.count = 1;
      std::array<std::uint16_t, 2 * kCap * kCap> queue{};
      queue[0] = root.cells[0];
      refine(root, queue, 1);
      visit(root, 0, true);
    }

    Labelling out;
    out.labelling.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out.labelling[static_cast<std::size_t>(i)] = best_lab_[i];
    std::array<int, kCap> uf{};
    std::iota(uf.begin(), uf.end(), 0);
    for (const Perm& p : gens_) unite_all(uf, p);
    out.orbit.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) out.orbit[static_cast<std::size_t>(v)] = find(uf, v);
    for (const Perm& p : gens_) out.generators.emplace_back(p.begin(), p.begin() + n_);
    Graph cg(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if ((best_rows_[i] >> j) & 1U) cg.add_edge(i, j);
      }
    }
    out.form = CanonicalForm{cg};
    return out;
  }

 private:
  struct Partition {
    std::array<std::uint16_t, kCap> cells{};
    int count = 0;
  };

  static constexpr int kNoJump = -1;

  static int find(std::array<int, kCap>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }
  // Union keeping the smaller representative so roots are least vertices.
  static void unite(std::array<int, kCap>& uf, int a, int b) {
    a = find(uf, a);
    b = find(uf, b);
    if (a == b) return;
    if (a < b) uf[b] = a; else uf[a] = b;
  }
  void unite_all(std::array<int, kCap>& uf, const Perm& p) const {
    for (int v = 0; v < n_; ++v) unite(uf, v, p[v]);
  }

  // Splits cells by neighbour counts into splitter sets until equitable.
  void refine(Partition& p, std::array<std::uint16_t, 2 * kCap * kCap>& queue, int qlen) const {
    int qhead = 0;
    while (qhead < qlen) {
      const std::uint16_t w = queue[qhead++];
      for (int i = 0; i < p.count; ++i) {
        const std::uint16_t x = p.cells[i];
        if (std::has_single_bit(x)) continue;
        // bucket[c] = members of x with exactly c neighbours in w.
        std::array<std::uint16_t, kCap + 1> bucket{};
        std::uint32_t seen = 0;
        for (std::uint16_t rest = x; rest; rest &= rest - 1) {
          int v = std::countr_zero(rest);
          int c = std::popcount(static_cast<unsigned>(adj_[v] & w));
          bucket[c] |= static_cast<std::uint16_t>(1U << v);
          seen |= 1U << c;
        }
        if (std::has_single_bit(seen)) continue;
        const int pieces = std::popcount(seen);
        for (int j = p.count - 1; j > i; --j) p.cells[j + pieces - 1] = p.cells[j];
        int k = i;
        for (std::uint32_t s = seen; s; s &= s - 1) {
          std::uint16_t frag = bucket[std::countr_zero(s)];
          p.cells[k++] = frag;
          queue[qlen++] = frag;
        }
        p.count += pieces - 1;
        i += pieces - 1;
      }
    }
  }

  void leaf_rows(const Partition& p, Perm& lab, Rows& rows) const {
    std::array<int, kCap> pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = static_cast<std::uint8_t>(std::countr_zero(static_cast<unsigned>(p.cells[i])));
      pos[lab[i]] = i;
    }
    for (int i = 0; i < n_; ++i) {
      std::uint16_t r = 0;
      for (std::uint16_t rest = adj_[lab[i]]; rest; rest &= rest - 1) {
        r |= static_cast<std::uint16_t>(1U << pos[std::countr_zero(rest)]);
      }
      rows[i] = r;
    }
  }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  // Automorphism sending lab_from[i] to lab_to[i].
  Perm automorphism(const Perm& lab_from, const Perm& lab_to) const {
    Perm g{};
    for (int i = 0; i < n_; ++i) g[lab_from[i]] = lab_to[i];
    return g;
  }

  int common_prefix(const std::array<std::uint8_t, kCap>& a, int depth) const {
    int c = 0;
    while (c < depth && path_[c] == a[c]) ++c;
    return c;
  }

  int visit(const Partition& p, int depth, bool on_first_path) {
    if (p.count == n_) return at_leaf(p, depth);

    int target = 0;
    while (std::has_single_bit(p.cells[target])) ++target;
    const std::uint16_t cell = p.cells[target];

    std::uint16_t explored = 0;
    for (std::uint16_t rest = cell; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (on_first_path && explored && same_orbit_as_explored(w, explored, depth)) continue;

      Partition child = p;
      for (int j = child.count - 1; j > target; --j) child.cells[j + 1] = child.cells[j];
      child.cells[target] = static_cast<std::uint16_t>(1U << w);
      child.cells[target + 1] = static_cast<std::uint16_t>(cell & ~(1U << w));
      ++child.count;
      std::array<std::uint16_t, 2 * kCap * kCap> queue{};
      queue[0] = child.cells[target];
      refine(child, queue, 1);

      path_[depth] = static_cast<std::uint8_t>(w);
      const bool first_child = on_first_path && explored == 0;
      explored = static_cast<std::uint16_t>(explored | (1U << w));
      const int jump = visit(child, depth + 1, first_child);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  // Orbit test under the automorphisms found so far that fix the first-path
  // prefix of length `depth` pointwise.
  bool same_orbit_as_explored(int w, std::uint16_t explored, int depth) const {
    std::array<int, kCap> uf{};
    std::iota(uf.begin(), uf.end(), 0);
    for (const Perm& g : gens_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = g[first_path_[i]] == first_path_[i];
      if (fixes) unite_all(uf, g);
    }
    const int root = find(uf, w);
    for (std::uint16_t rest = explored; rest; rest &= rest - 1) {
      if (find(uf, std::countr_zero(rest)) == root) return true;
    }
    return false;
  }

  int at_leaf(const Partition& p, int depth) {
    Perm lab{};
    Rows rows{};
    leaf_rows(p, lab, rows);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_rows_ = best_rows_ = rows;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (compare(rows, first_rows_) == 0) {
      gens_.push_back(automorphism(lab, first_lab_));
      return common_prefix(first_path_, depth);
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp > 0) {
      best_lab_ = lab;
      best_rows_ = rows;
      best_path_ = path_;
    } else if (cmp == 0) {
      gens_.push_back(automorphism(lab, best_lab_));
      return common_prefix(best_path_, depth);
    }
    return kNoJump;
  }

  int n_;
  std::array<std::uint16_t, kCap> adj_{};
  std::array<std::uint8_t, kCap> path_{};
  bool have_first_ = false;
  Perm first_lab_{}, best_lab_{};
  Rows first_rows_{}, best_rows_{};
  std::array<std::uint8_t, kCap> first_path_{}, best_path_{};
  std::vector<Perm> gens_;
};

}  // namespace detail

/// Canonical labelling, automorphism orbits and generators of g (n <= 12).
inline Labelling canonical_labelling(const Graph& g) {
  if (g.order() > kCanonMaxOrder) {
    throw CapacityError("canonical form supports at most " + std::to_string(kCanonMaxOrder) +
                        " vertices, got " + std::to_string(g.order()));
  }
  return detail::CanonSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labelling(g).form; }

}  // namespace hamheavy
