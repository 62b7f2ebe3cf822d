#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "hamheavy/error.hpp"
#include "hamheavy/profile.hpp"

// Hamiltonicity implications checked by the harness. Each entry's hypothesis
// is a predicate over a ProfileCache; the conclusion is always "Hamiltonian".
// Entries with an "if and only if" form also carry reverse probes: the same
// hypothesis with an excluded pattern substituted, for which a non-Hamiltonian
// witness is searched.

namespace hamheavy {

using Hypothesis = std::function<bool(ProfileCache&)>;

struct ReverseProbe {
  std::string pattern;  // catalog token of the excluded pattern
  Hypothesis hypothesis;
};

struct TheoremSpec {
  std::string id;         // CLI token, lowercase
  std::string condition;  // human-readable hypothesis
  int n_floor = 3;        // the implication is claimed only for n >= n_floor
  bool needs_2connected = true;
  Hypothesis hypothesis;
  std::vector<ReverseProbe> reverse;
  bool exploratory = false;  // no claimed outcome; only selected by its own token
};

namespace detail {

inline std::string token(Pat p) { return pattern(p).name; }

inline std::string list(std::initializer_list<Pat> ps) {
  std::string s;
  for (Pat p : ps) s += (s.empty() ? "" : ",") + token(p);
  return s;
}

// Condition builders.
inline Hypothesis claw_free_and(bool (ProfileCache::*what)(Pat), Pat s) {
  return [=](ProfileCache& c) { return c.free(Pat::k13) && (c.*what)(s); };
}
inline Hypothesis claw_o_and(bool (ProfileCache::*what)(Pat), Pat s) {
  return [=](ProfileCache& c) { return c.o_heavy(Pat::k13) && (c.*what)(s); };
}
inline Hypothesis claw_f_and(bool (ProfileCache::*what)(Pat), Pat s) {
  return [=](ProfileCache& c) { return c.f_heavy(Pat::k13) && (c.*what)(s); };
}

using Builder = Hypothesis (*)(bool (ProfileCache::*)(Pat), Pat);

inline Hypothesis any_of(Builder b, bool (ProfileCache::*what)(Pat), std::initializer_list<Pat> ps) {
  std::vector<Hypothesis> parts;
  for (Pat p : ps) parts.push_back(b(what, p));
  return [parts](ProfileCache& c) {
    return std::any_of(parts.begin(), parts.end(), [&](const Hypothesis& h) { return h(c); });
  };
}

inline std::vector<ReverseProbe> probes(Builder b, bool (ProfileCache::*what)(Pat), std::initializer_list<Pat> ps) {
  std::vector<ReverseProbe> out;
  for (Pat p : ps) out.push_back({token(p), b(what, p)});
  return out;
}

}  // namespace detail

inline const std::vector<TheoremSpec>& theorem_registry() {
  using detail::any_of;
  using detail::claw_f_and;
  using detail::claw_free_and;
  using detail::claw_o_and;
  using detail::list;
  using detail::probes;
  constexpr auto F = &ProfileCache::free;
  constexpr auto O = &ProfileCache::o_heavy;
  constexpr auto H = &ProfileCache::f_heavy;
  using enum Pat;

  static const std::vector<TheoremSpec> kSpecs = [&] {
    std::vector<TheoremSpec> v;
    auto pair_f = [&](const std::string& id, Pat s) {
      v.push_back({id, "{k13," + detail::token(s) + "}-f-heavy", 3, true, claw_f_and(H, s), {}});
    };
    const auto free9 = {p4, p5, p6, c3, z1, z2, b, n, w};
    const auto f8 = {p4, p5, p6, z1, z2, b, n, w};
    const auto f9 = {p4, p5, p6, z1, z2, z3, b, n, w};
    const auto o8 = {p4, p5, c3, z1, z2, b, n, w};

    v.push_back({"t1", "claw-free and S-free, S in " + list(free9), 3, true, any_of(claw_free_and, F, free9),
                 probes(claw_free_and, F, {z3})});
    v.push_back({"t3", "claw-o-heavy and S-o-heavy, S in " + list(o8), 3, true, any_of(claw_o_and, O, o8),
                 probes(claw_o_and, O, {p6, z3})});
    v.push_back({"t4", "claw-o-heavy and S-free, S in " + list(free9), 3, true, any_of(claw_o_and, F, free9),
                 probes(claw_o_and, F, {z3})});
    pair_f("t6", p6);
    pair_f("t7", z1);
    pair_f("t8", b);
    pair_f("t9", n);
    pair_f("t10", z2);
    pair_f("t11", w);
    v.push_back({"t12", "{k13,S}-f-heavy, S in " + list(f8), 3, true, any_of(claw_f_and, H, f8),
                 probes(claw_f_and, H, {c3, z3})});
    v.push_back({"t13", "claw-o-heavy and S-f-heavy, S in " + list({p6, z2, w, n}), 3, true,
                 any_of(claw_o_and, H, {p6, z2, w, n}), {}});
    v.push_back({"t14", "claw-o-heavy and S-f-heavy, S in " + list(f8), 3, true, any_of(claw_o_and, H, f8),
                 probes(claw_o_and, H, {c3, z3})});
    v.push_back({"t15", "claw-free and S-free, S in " + list({p4, p5, p6, c3, z1, z2, z3, b, n, w}), 10, true,
                 any_of(claw_free_and, F, {p4, p5, p6, c3, z1, z2, z3, b, n, w}), {}});
    v.push_back({"t16", "{k13,z3}-f-heavy", 10, true, claw_f_and(H, z3), {}});
    v.push_back({"t17", "{k13,S}-f-heavy, S in " + list(f9), 10, true, any_of(claw_f_and, H, f9),
                 probes(claw_f_and, H, {c3})});
    v.push_back({"co1", "claw-f-heavy and S-o-heavy, S in " + list(o8), 3, true, any_of(claw_f_and, O, o8),
                 probes(claw_f_and, O, {p6, z3})});
    v.push_back({"co2", "claw-free and S-f-heavy, S in " + list(f8), 3, true, any_of(claw_free_and, H, f8),
                 probes(claw_free_and, H, {c3, z3})});
    v.push_back({"co3", "claw-f-heavy and S-free, S in " + list(free9), 3, true, any_of(claw_f_and, F, free9),
                 probes(claw_f_and, F, {z3})});
    v.push_back({"ore", "every nonadjacent pair has degree sum >= n", 3, false,
                 [](ProfileCache& c) { return c.ore(); }, {}});
    v.push_back({"fan", "every distance-2 pair has a vertex of degree >= n/2", 3, true,
                 [](ProfileCache& c) { return c.fan(); }, {}});
    TheoremSpec open{"k13o-z3f", "claw-o-heavy and z3-f-heavy (open)", 10, true, claw_o_and(H, z3), {}, true};
    v.push_back(open);
    return v;
  }();
  return kSpecs;
}

/// Resolves a CLI token ("t10", "ore", ...) or "all".
inline std::vector<TheoremSpec> select_theorems(std::string token) {
  std::transform(token.begin(), token.end(), token.begin(), [](unsigned char ch) { return std::tolower(ch); });
  const auto& reg = theorem_registry();
  if (token == "all") {
    std::vector<TheoremSpec> out;
    std::copy_if(reg.begin(), reg.end(), std::back_inserter(out), [](const TheoremSpec& t) { return !t.exploratory; });
    return out;
  }
  for (const auto& t : reg)
    if (t.id == token) return {t};
  throw PreconditionError("unknown theorem '" + token + "'");
}

/// Hypothesis including the connectivity requirement.
inline bool hypothesis_holds(const TheoremSpec& t, ProfileCache& c) {
  if (c.order() < 3) return false;
  if (t.needs_2connected && !c.two_connected()) return false;
  return t.hypothesis(c);
}

inline bool probe_holds(const TheoremSpec& t, const ReverseProbe& p, ProfileCache& c) {
  if (c.order() < std::max(3, t.n_floor)) return false;
  if (t.needs_2connected && !c.two_connected()) return false;
  return p.hypothesis(c);
}

}  // namespace hamheavy
