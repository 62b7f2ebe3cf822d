#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamheavy/composed.hpp"
#include "hamheavy/harness.hpp"
#include "hamheavy/ocycle.hpp"
#include "hamheavy/parallel.hpp"
#include "hamheavy/profile.hpp"

// JSON forms of every record the harness writes. Reports are JSON Lines with
// keys in a fixed order (ordered_json) so identical runs are byte-identical
// apart from wall_time_s.

namespace hamheavy {

using Json = nlohmann::ordered_json;

inline Json to_json(const ConditionProfile& p) {
  Json pats = Json::object();
  for (std::size_t i = 0; i < kCatalogSize; ++i) {
    const PatternStatus& s = p.patterns[i];
    pats[catalog()[i].name] = Json{{"free", s.free}, {"o", s.o_heavy}, {"f", s.f_heavy}};
  }
  return Json{{"g6", p.g6},
              {"n", p.n},
              {"two_connected", p.two_connected},
              {"hamiltonian", p.hamiltonian},
              {"patterns", pats}};
}

inline ConditionProfile profile_from_json(const Json& j) {
  ConditionProfile p;
  p.g6 = j.at("g6").get<std::string>();
  p.n = j.at("n").get<int>();
  p.two_connected = j.at("two_connected").get<bool>();
  p.hamiltonian = j.at("hamiltonian").get<bool>();
  const Json& pats = j.at("patterns");
  for (std::size_t i = 0; i < kCatalogSize; ++i) {
    const Json& s = pats.at(catalog()[i].name);
    p.patterns[i] = {s.at("free").get<bool>(), s.at("o").get<bool>(), s.at("f").get<bool>()};
  }
  return p;
}

inline Json to_json(const VerificationRecord& r) {
  Json rev = Json::array();
  for (const auto& s : r.reverse) {
    Json e{{"pattern", s.pattern}, {"status", s.status}};
    if (s.status == "open_at") e["n_max"] = s.n_max; else e["g6"] = s.g6;
    rev.push_back(e);
  }
  return Json{{"record", "verification"},
              {"theorem", r.theorem},
              {"condition", r.condition},
              {"n_min", r.n_min},
              {"n_max", r.n_max},
              {"n_floor", r.n_floor},
              {"source", r.source},
              {"scanned", r.scanned},
              {"in_range", r.in_range},
              {"hypothesis_hits", r.hypothesis_hits},
              {"counterexample_count", r.counterexample_count},
              {"counterexamples", r.counterexamples},
              {"below_floor_count", r.below_floor_count},
              {"below_floor", r.below_floor},
              {"reverse", rev},
              {"discrepancies", r.discrepancies},
              {"wall_time_s", r.wall_time_s}};
}

inline Json to_json(const SeparationRecord& r) {
  Json j{{"record", "separation"}, {"query", r.query}, {"n_max", r.n_max}, {"found", r.found}};
  if (r.found) {
    j["g6"] = r.g6;
    j["reverified"] = r.reverified;
    j["profile"] = to_json(*r.profile);
  } else {
    j["exhausted_at"] = r.exhausted_at;
  }
  j["scanned"] = r.scanned;
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

inline Json to_json(const SweepCounts& c) {
  return Json{{"record", "sweep"},
              {"check", c.check},
              {"n_min", c.n_min},
              {"n_max", c.n_max},
              {"corpus", c.corpus},
              {"graphs", c.graphs},
              {"instances", c.instances},
              {"hypothesis_hits", c.hypothesis_hits},
              {"confirmed", c.confirmed},
              {"skipped", c.skipped},
              {"violated", c.violated},
              {"violations", c.violations},
              {"wall_time_s", c.wall_time_s}};
}

inline Json to_json(const RealizeStats& s) {
  return Json{{"record", "realize_random"},
              {"instances", s.instances},
              {"with_virtual", s.with_virtual},
              {"fast_path", s.fast_path},
              {"fallback", s.fallback},
              {"coverage", s.coverage()},
              {"steps", s.steps},
              {"failures", s.failures},
              {"failure_detail", s.failure_detail},
              {"by_density", s.by_density}};
}

inline Json to_json(const Path& p) { return Json(p.vertices); }

inline Json to_json(const Realization& r) {
  Json trace = Json::array();
  for (const auto& st : r.trace) {
    Json e{{"step", st.kind == RealizeStep::Kind::insert ? "insert" : "exchange"}, {"x", st.x}, {"y", st.y}};
    if (st.kind == RealizeStep::Kind::insert) {
      e["z"] = st.z;
    } else {
      e["a"] = st.a;
      e["b"] = st.b;
    }
    e["result"] = st.result;
    e["virtual_after"] = st.virtual_after;
    trace.push_back(e);
  }
  return Json{{"cycle", r.cycle.vertices()}, {"fast_path", r.fast_path}, {"trace", trace}};
}

inline Json to_json(const Graph& g, const CanonicalSequence& cs) {
  Json steps = Json::array();
  for (const auto& st : cs.steps) {
    Json e{{"kind", to_string(st.kind)}, {"interval", {-st.left, st.right}}};
    if (st.kind != Extension::both) e["anchor"] = st.anchor;
    steps.push_back(e);
  }
  return Json{{"ordering", cs.ordering},
              {"center", cs.center},
              {"steps", steps},
              {"hamilton_path", to_json(carrier_hamilton_path(g, cs))}};
}

inline Json to_json(const GoodPairWitness& w) {
  return Json{{"cycle", w.cycle.vertices()},
              {"x", w.x},
              {"x1", w.x1},
              {"x2", w.x2},
              {"side", w.side},
              {"x_prime", w.x_prime},
              {"segment", w.segment},
              {"p_prime", to_json(w.p_prime)},
              {"pair", {to_json(w.d.first), to_json(w.d.second)}}};
}

/// Writes one ConditionProfile line per graph of `in`; returns the count.
inline std::size_t classify_stream(GraphStream& in, std::ostream& out, unsigned threads = default_threads()) {
  std::size_t total = 0;
  std::vector<Graph> batch;
  while (in.next_batch(batch, 1024) > 0) {
    const auto profiles = parallel_map(batch, [](const Graph& g) { return to_json(profile(g)).dump(); }, threads);
    for (const auto& line : profiles) out << line << '\n';
    if (!out) throw Error("write failed while classifying " + in.provenance());
    total += batch.size();
    batch.clear();
  }
  return total;
}

}  // namespace hamheavy
