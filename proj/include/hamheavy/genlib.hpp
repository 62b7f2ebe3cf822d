#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamheavy/canon.hpp"
#include "hamheavy/error.hpp"
#include "hamheavy/graph.hpp"
#include "hamheavy/graph6.hpp"

// Isomorph-free generation of small graphs by canonical vertex augmentation.
//
// Graphs on m vertices are produced from graphs on m-1 vertices by adding a
// vertex v joined to a subset S. A child is kept only if v lies in the
// automorphism orbit of the child's canonical deletion vertex, and only one
// S per Aut(parent)-orbit of subsets is tried. Together these give exactly
// one child per isomorphism class.
//
// The canonical deletion vertex minimises (degree, sum of neighbour degrees);
// ties are broken by position in the canonical labelling, so the labelling is
// only computed when the cheap invariant does not decide.

namespace hamheavy {

enum class Filter { all, connected, two_connected };

inline std::string to_string(Filter f) {
  switch (f) {
    case Filter::all: return "all";
    case Filter::connected: return "connected";
    case Filter::two_connected: return "2conn";
  }
  return "?";
}

inline Filter parse_filter(const std::string& s) {
  if (s == "all") return Filter::all;
  if (s == "connected") return Filter::connected;
  if (s == "2conn" || s == "two_connected" || s == "2-connected") return Filter::two_connected;
  throw PreconditionError("unknown filter '" + s + "'");
}

inline bool passes(const Graph& g, Filter f) {
  switch (f) {
    case Filter::all: return true;
    case Filter::connected: return is_connected(g);
    case Filter::two_connected: return is_2connected(g);
  }
  return false;
}

/// Largest order accepted by the generator for a filter.
inline int generation_cap(Filter f) { return f == Filter::two_connected ? 10 : 9; }

namespace detail {

inline constexpr int kGenMaxOrder = 11;  // upper triangle fits one 64-bit word

inline std::uint64_t pack(const Graph& g) {
  std::uint64_t code = 0;
  int bit = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << bit;
  return code;
}

inline Graph unpack(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((code >> bit) & 1U) g.add_edge(i, j);
  return g;
}

class Augmenter {
 public:
  // Calls emit(child) for every accepted one-vertex extension of `parent`.
  template <class Emit>
  void extend(const Graph& parent, Emit&& emit) {
    const int pm = parent.order();
    const int m = pm + 1;
    const std::uint32_t masks = 1U << pm;

    std::array<int, 16> pdeg{};
    for (Vertex u = 0; u < pm; ++u) pdeg[u] = parent.degree(u);
    const int pmin = pm == 0 ? 0 : *std::min_element(pdeg.begin(), pdeg.begin() + pm);

    mark_orbit_representatives(parent, masks);

    for (std::uint32_t s = 0; s < masks; ++s) {
      const int k = std::popcount(s);
      // The new vertex must reach the minimum degree of the child.
      if (k > pmin + 1) continue;
      if (!rep_[s]) continue;

      std::array<int, 16> deg{};
      bool min_ok = true;
      for (Vertex u = 0; u < pm; ++u) {
        deg[u] = pdeg[u] + static_cast<int>((s >> u) & 1U);
        if (deg[u] < k) { min_ok = false; break; }
      }
      if (!min_ok) continue;
      deg[pm] = k;

      const Graph child = parent.with_vertex(VertexSet{s});

      std::array<long, 16> key{};
      long best = std::numeric_limits<long>::max();
      for (Vertex v = 0; v < m; ++v) {
        long sum = 0;
        for (Vertex w : child.neighbors(v)) sum += deg[w];
        key[v] = static_cast<long>(deg[v]) * 4096 + sum;
        best = std::min(best, key[v]);
      }
      if (key[pm] != best) continue;
      int ties = 0;
      for (Vertex v = 0; v < m; ++v) ties += key[v] == best ? 1 : 0;
      if (ties > 1) {
        const Labelling lab = canonical_labelling(child);
        Vertex chosen = -1;
        for (Vertex v : lab.labelling) {
          if (key[v] == best) { chosen = v; break; }
        }
        if (lab.orbit[chosen] != lab.orbit[pm]) continue;
      }
      emit(child);
    }
  }

 private:
  // rep_[s] is set iff s is the least subset in its Aut(parent)-orbit.
  void mark_orbit_representatives(const Graph& parent, std::uint32_t masks) {
    rep_.assign(masks, 1);
    const Labelling lab = canonical_labelling(parent);
    if (lab.generators.empty()) return;
    uf_.resize(masks);
    std::iota(uf_.begin(), uf_.end(), 0U);
    for (const auto& gen : lab.generators) {
      for (std::uint32_t s = 0; s < masks; ++s) {
        std::uint32_t img = 0;
        for (std::uint32_t r = s; r; r &= r - 1) img |= 1U << gen[static_cast<std::size_t>(std::countr_zero(r))];
        unite(s, img);
      }
    }
    for (std::uint32_t s = 0; s < masks; ++s) rep_[s] = find(s) == s ? 1 : 0;
  }

  std::uint32_t find(std::uint32_t x) {
    while (uf_[x] != x) x = uf_[x] = uf_[uf_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) uf_[b] = a; else uf_[a] = b;
  }

  std::vector<std::uint8_t> rep_;
  std::vector<std::uint32_t> uf_;
};

// All graphs of order m, one per isomorphism class, as packed codes.
inline std::vector<std::uint64_t> level(int m) {
  std::vector<std::uint64_t> cur{0};  // K1
  Augmenter aug;
  for (int k = 2; k <= m; ++k) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : cur) {
      aug.extend(unpack(k - 1, code), [&](const Graph& c) { next.push_back(pack(c)); });
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// Visits one representative of every isomorphism class of graphs on n
/// vertices passing `filter`, in a fixed deterministic order.
template <class Visit>
void enumerate_into(int n, Filter filter, Visit&& visit) {
  if (n < 1 || n > generation_cap(filter)) {
    throw CapacityError("enumeration with filter " + to_string(filter) + " supports 1 <= n <= " +
                        std::to_string(generation_cap(filter)) + ", got " + std::to_string(n));
  }
  if (n == 1) {
    Graph k1(1);
    if (passes(k1, filter)) visit(k1);
    return;
  }
  detail::Augmenter aug;
  for (std::uint64_t code : detail::level(n - 1)) {
    aug.extend(detail::unpack(n - 1, code), [&](const Graph& c) {
      if (passes(c, filter)) visit(c);
    });
  }
}

/// An ordered source of graphs with a provenance tag and a running count.
class GraphStream {
 public:
  /// Materialised generated(n) stream.
  static GraphStream generated(int n, Filter filter) {
    GraphStream s;
    s.provenance_ = "generated(n=" + std::to_string(n) + ",filter=" + to_string(filter) + ")";
    s.order_ = n;
    auto codes = std::make_shared<std::vector<std::uint64_t>>();
    enumerate_into(n, filter, [&](const Graph& g) { codes->push_back(detail::pack(g)); });
    s.codes_ = std::move(codes);
    return s;
  }

  /// Graphs from a graph6 file, in file order, without deduplication.
  static GraphStream file(const std::string& path) {
    GraphStream s;
    s.provenance_ = "file(" + path + ")";
    s.path_ = path;
    s.in_ = std::make_shared<std::ifstream>(path);
    if (!*s.in_) throw Error("cannot open graph6 file '" + path + "'");
    return s;
  }

  static GraphStream of(std::vector<Graph> graphs, std::string provenance) {
    GraphStream s;
    s.provenance_ = std::move(provenance);
    s.graphs_ = std::make_shared<std::vector<Graph>>(std::move(graphs));
    return s;
  }

  const std::string& provenance() const { return provenance_; }
  bool is_generated() const { return codes_ != nullptr; }
  /// Graphs delivered so far.
  std::size_t count() const { return delivered_; }

  std::optional<Graph> next() {
    if (codes_) {
      if (pos_ >= codes_->size()) return std::nullopt;
      ++delivered_;
      return detail::unpack(order_, (*codes_)[pos_++]);
    }
    if (graphs_) {
      if (pos_ >= graphs_->size()) return std::nullopt;
      ++delivered_;
      return (*graphs_)[pos_++];
    }
    if (in_) {
      std::string line;
      while (std::getline(*in_, line)) {
        ++line_no_;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
          Graph g = parse_graph6(line);
          ++delivered_;
          return g;
        } catch (const ParseError& e) {
          throw ParseError(path_ + ":" + std::to_string(line_no_) + ": " + e.what(), e.offset());
        }
      }
      if (in_->bad()) throw Error("read error on '" + path_ + "'");
    }
    return std::nullopt;
  }

  /// Appends up to `max` graphs to out; returns how many were appended.
  std::size_t next_batch(std::vector<Graph>& out, std::size_t max) {
    std::size_t k = 0;
    while (k < max) {
      auto g = next();
      if (!g) break;
      out.push_back(*g);
      ++k;
    }
    return k;
  }

 private:
  GraphStream() = default;

  std::string provenance_;
  int order_ = 0;
  std::shared_ptr<std::vector<std::uint64_t>> codes_;
  std::shared_ptr<std::vector<Graph>> graphs_;
  std::shared_ptr<std::ifstream> in_;
  std::string path_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  std::size_t delivered_ = 0;
};

inline GraphStream enumerate(int n, Filter filter) { return GraphStream::generated(n, filter); }

inline GraphStream ingest(const std::string& path) { return GraphStream::file(path); }

}  // namespace hamheavy
