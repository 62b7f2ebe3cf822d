#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "hamheavy/brute.hpp"
#include "hamheavy/graph.hpp"
#include "hamheavy/graph6.hpp"
#include "hamheavy/hamilton.hpp"
#include "hamheavy/heavy.hpp"
#include "hamheavy/patterns.hpp"

namespace hamheavy {

/// Catalog positions, in catalog() order.
enum class Pat : std::uint8_t { k13, p3, p4, p5, p6, c3, z1, z2, z3, b, n, w };

inline constexpr std::size_t kCatalogSize = 12;

inline const Pattern& pattern(Pat p) { return catalog()[static_cast<std::size_t>(p)]; }

/// Every pair of nonadjacent vertices has degree sum >= n.
inline bool satisfies_ore(const Graph& g) {
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (!g.adjacent(x, y) && g.degree(x) + g.degree(y) < g.order()) return false;
  return true;
}

/// Every pair at distance 2 has a vertex of degree >= n/2.
inline bool satisfies_fan(const Graph& g) {
  const VertexSet light = g.vertices() - heavy_vertices(g);
  for (Vertex x : light) {
    VertexSet two;
    for (Vertex u : g.neighbors(x)) two |= g.neighbors(u);
    two = two - g.neighbors(x) - VertexSet::single(x);
    if (two.intersects(light)) return false;
  }
  return true;
}

enum class Evaluation { fast, brute };

/// Predicates of one graph, each computed on first use. With
/// Evaluation::brute the pattern predicates and Hamiltonicity come from the
/// unpruned reference code instead.
class ProfileCache {
 public:
  explicit ProfileCache(const Graph& g, Evaluation mode = Evaluation::fast) : g_(g), mode_(mode) {}

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }

  bool two_connected() {
    if (!two_connected_) two_connected_ = is_2connected(g_);
    return *two_connected_;
  }
  bool hamiltonian() {
    if (!hamiltonian_) {
      const bool slow = mode_ == Evaluation::brute && g_.order() <= brute::kMaxHamiltonOrder;
      hamiltonian_ = slow ? brute::hamiltonian(g_) : is_hamiltonian(g_);
    }
    return *hamiltonian_;
  }
  bool ore() {
    if (!ore_) ore_ = satisfies_ore(g_);
    return *ore_;
  }
  bool fan() {
    if (!fan_) fan_ = satisfies_fan(g_);
    return *fan_;
  }

  bool free(Pat p) {
    if (mode_ == Evaluation::brute) return load_brute(p).free;
    return get(free_, p, [&] { return is_free(g_, pattern(p)); });
  }
  bool o_heavy(Pat p) {
    if (mode_ == Evaluation::brute) return load_brute(p).o_heavy;
    return get(o_, p, [&] { return (free_[idx(p)] == 1) || is_o_heavy(g_, pattern(p)); });
  }
  bool f_heavy(Pat p) {
    if (mode_ == Evaluation::brute) return load_brute(p).f_heavy;
    return get(f_, p, [&] { return (free_[idx(p)] == 1) || is_f_heavy(g_, pattern(p)); });
  }

  PatternStatus status(Pat p) { return {free(p), o_heavy(p), f_heavy(p)}; }

 private:
  static std::size_t idx(Pat p) { return static_cast<std::size_t>(p); }

  // -1 unknown, 0 false, 1 true
  template <class F>
  bool get(std::array<std::int8_t, kCatalogSize>& slot, Pat p, F&& compute) {
    std::int8_t& s = slot[idx(p)];
    if (s < 0) s = compute() ? 1 : 0;
    return s == 1;
  }

  PatternStatus load_brute(Pat p) {
    if (free_[idx(p)] < 0) {
      const PatternStatus st = brute::status(g_, pattern(p));
      free_[idx(p)] = st.free ? 1 : 0;
      o_[idx(p)] = st.o_heavy ? 1 : 0;
      f_[idx(p)] = st.f_heavy ? 1 : 0;
    }
    return {free_[idx(p)] == 1, o_[idx(p)] == 1, f_[idx(p)] == 1};
  }

  Graph g_;
  Evaluation mode_;
  std::optional<bool> two_connected_, hamiltonian_, ore_, fan_;
  std::array<std::int8_t, kCatalogSize> free_ = filled();
  std::array<std::int8_t, kCatalogSize> o_ = filled();
  std::array<std::int8_t, kCatalogSize> f_ = filled();

  static constexpr std::array<std::int8_t, kCatalogSize> filled() {
    std::array<std::int8_t, kCatalogSize> a{};
    a.fill(-1);
    return a;
  }
};

struct ConditionProfile {
  std::string g6;
  int n = 0;
  bool two_connected = false;
  bool hamiltonian = false;
  std::array<PatternStatus, kCatalogSize> patterns{};

  const PatternStatus& operator[](Pat p) const { return patterns[static_cast<std::size_t>(p)]; }
  bool operator==(const ConditionProfile&) const = default;
};

inline ConditionProfile profile(const Graph& g) {
  ProfileCache cache(g);
  ConditionProfile p;
  p.g6 = to_graph6(g);
  p.n = g.order();
  p.two_connected = cache.two_connected();
  p.hamiltonian = cache.hamiltonian();
  for (std::size_t i = 0; i < kCatalogSize; ++i) p.patterns[i] = cache.status(static_cast<Pat>(i));
  return p;
}

}  // namespace hamheavy
