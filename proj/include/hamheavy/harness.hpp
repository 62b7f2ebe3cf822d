#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hamheavy/brute.hpp"
#include "hamheavy/composed.hpp"
#include "hamheavy/genlib.hpp"
#include "hamheavy/graph6.hpp"
#include "hamheavy/hamilton.hpp"
#include "hamheavy/ocycle.hpp"
#include "hamheavy/parallel.hpp"
#include "hamheavy/profile.hpp"
#include "hamheavy/theorems.hpp"

namespace hamheavy {

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Where graphs come from: every 2-connected graph with n_min <= n <= n_max,
/// or a graph6 file (graphs outside the order range are skipped).
struct CorpusSpec {
  int n_min = 3;
  int n_max = 8;
  std::optional<std::string> file;

  std::string provenance() const {
    if (file) return "file(" + *file + ")";
    return "generated(n=" + std::to_string(n_min) + ".." + std::to_string(n_max) + ",filter=2conn)";
  }
};

/// Feeds the corpus to `batch` in chunks of at most `size` graphs, in a
/// fixed order. Returns the number of graphs read (including skipped ones).
inline std::size_t for_each_batch(const CorpusSpec& corpus, std::size_t size,
                                  const std::function<void(std::vector<Graph>&)>& batch) {
  std::vector<Graph> buf;
  buf.reserve(size);
  std::size_t read = 0;
  auto flush = [&] {
    if (!buf.empty()) batch(buf);
    buf.clear();
  };
  if (corpus.file) {
    GraphStream in = GraphStream::file(*corpus.file);
    while (auto g = in.next()) {
      ++read;
      if (g->order() < corpus.n_min || g->order() > corpus.n_max) continue;
      buf.push_back(std::move(*g));
      if (buf.size() >= size) flush();
    }
  } else {
    for (int n = std::max(1, corpus.n_min); n <= corpus.n_max; ++n) {
      enumerate_into(n, Filter::two_connected, [&](const Graph& g) {
        ++read;
        buf.push_back(g);
        if (buf.size() >= size) flush();
      });
    }
  }
  flush();
  return read;
}

// ---------------------------------------------------------------------------
// Theorem verification

struct ReverseStatus {
  std::string pattern;
  std::string status;  // witness_found | verified_from_file | open_at
  std::string g6;      // witness when found
  int n_max = 0;
};

struct VerificationRecord {
  std::string theorem;
  std::string condition;
  int n_min = 0;
  int n_max = 0;
  int n_floor = 3;
  std::string source;
  long scanned = 0;
  long in_range = 0;
  long hypothesis_hits = 0;
  long counterexample_count = 0;
  long below_floor_count = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> below_floor;  // hypothesis holds, not Hamiltonian, n below the floor
  std::vector<std::string> discrepancies;
  std::vector<ReverseStatus> reverse;
  double wall_time_s = 0;
};

struct VerifyOptions {
  unsigned threads = default_threads();
  std::size_t batch = 4096;
  std::size_t keep = 50;  // graph6 strings stored per list
};

namespace detail {

struct GraphOutcome {
  std::vector<std::uint8_t> hyp;    // per theorem
  std::vector<std::uint8_t> probe;  // per (theorem, probe), flattened
  bool hamiltonian = true;
};

inline GraphOutcome evaluate_outcome(const Graph& g, const std::vector<TheoremSpec>& specs) {
  ProfileCache cache(g);
  GraphOutcome o;
  bool need_ham = false;
  for (const auto& t : specs) {
    const bool h = hypothesis_holds(t, cache);
    o.hyp.push_back(h ? 1 : 0);
    need_ham = need_ham || h;
    for (const auto& p : t.reverse) {
      const bool ph = probe_holds(t, p, cache);
      o.probe.push_back(ph ? 1 : 0);
      need_ham = need_ham || ph;
    }
  }
  if (need_ham) o.hamiltonian = cache.hamiltonian();
  return o;
}

// Independent re-check: reference pattern predicates and Hamiltonicity.
inline bool reference_counterexample(const Graph& g, const TheoremSpec& t) {
  ProfileCache ref(g, Evaluation::brute);
  return hypothesis_holds(t, ref) && !ref.hamiltonian();
}

inline bool reference_probe_witness(const Graph& g, const TheoremSpec& t, const ReverseProbe& p) {
  ProfileCache ref(g, Evaluation::brute);
  return probe_holds(t, p, ref) && !ref.hamiltonian();
}

}  // namespace detail

inline std::vector<VerificationRecord> verify_theorems(const std::vector<TheoremSpec>& specs,
                                                       const CorpusSpec& corpus,
                                                       const VerifyOptions& opt = {}) {
  if (!corpus.file && corpus.n_max > generation_cap(Filter::two_connected)) {
    throw CapacityError("generated corpus supports n <= " + std::to_string(generation_cap(Filter::two_connected)) +
                        "; supply a graph6 file for larger orders");
  }
  detail::Stopwatch clock;
  std::vector<VerificationRecord> recs(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto& r = recs[i];
    r.theorem = specs[i].id;
    r.condition = specs[i].condition;
    r.n_min = corpus.n_min;
    r.n_max = corpus.n_max;
    r.n_floor = specs[i].n_floor;
    r.source = corpus.provenance();
    for (const auto& p : specs[i].reverse) r.reverse.push_back({p.pattern, "open_at", "", corpus.n_max});
  }
  const std::string found_status = corpus.file ? "verified_from_file" : "witness_found";

  const std::size_t read = for_each_batch(corpus, opt.batch, [&](std::vector<Graph>& batch) {
    auto outcomes = parallel_map(batch, [&](const Graph& g) { return detail::evaluate_outcome(g, specs); },
                                 opt.threads);
    for (std::size_t gi = 0; gi < batch.size(); ++gi) {
      const Graph& g = batch[gi];
      const auto& o = outcomes[gi];
      std::size_t pi = 0;
      for (std::size_t ti = 0; ti < specs.size(); ++ti) {
        const auto& t = specs[ti];
        auto& r = recs[ti];
        ++r.in_range;
        if (o.hyp[ti]) {
          ++r.hypothesis_hits;
          if (!o.hamiltonian) {
            const bool below = g.order() < t.n_floor;
            const std::string g6 = to_graph6(g);
            if (!detail::reference_counterexample(g, t)) {
              r.discrepancies.push_back(g6 + ": reference evaluation does not confirm");
            } else if (below) {
              if (r.below_floor.size() < opt.keep) r.below_floor.push_back(g6);
              ++r.below_floor_count;
            } else {
              if (r.counterexamples.size() < opt.keep) r.counterexamples.push_back(g6);
              ++r.counterexample_count;
            }
          }
        }
        for (std::size_t k = 0; k < t.reverse.size(); ++k, ++pi) {
          auto& st = r.reverse[k];
          if (!o.probe[pi] || o.hamiltonian || st.status != "open_at") continue;
          if (detail::reference_probe_witness(g, t, t.reverse[k])) {
            st.status = found_status;
            st.g6 = to_graph6(g);
          } else {
            r.discrepancies.push_back(to_graph6(g) + ": probe " + st.pattern + " not confirmed by reference");
          }
        }
      }
    }
  });
  for (auto& r : recs) {
    r.scanned = static_cast<long>(read);
    r.wall_time_s = clock.seconds();
  }
  return recs;
}

// ---------------------------------------------------------------------------
// Separation searches

enum class Direction { f_not_o, o_not_f };

inline Direction parse_direction(const std::string& s) {
  if (s == "f-not-o" || s == "f_not_o") return Direction::f_not_o;
  if (s == "o-not-f" || s == "o_not_f") return Direction::o_not_f;
  throw PreconditionError("unknown direction '" + s + "'");
}

inline std::string to_string(Direction d) { return d == Direction::f_not_o ? "f_not_o" : "o_not_f"; }

struct SeparationRecord {
  std::string query;      // e.g. "n:f_not_o" or "z2-f-heavy-not-w-f-heavy"
  int n_max = 0;
  bool found = false;
  int exhausted_at = 0;  // n_max when nothing was found
  std::string g6;
  std::optional<ConditionProfile> profile;
  bool reverified = false;
  long scanned = 0;
  double wall_time_s = 0;
};

namespace detail {

// First 2-connected graph (by order, then generation order) passing `want`.
inline SeparationRecord first_witness(const std::string& query, int n_min, int n_max,
                                      const std::function<bool(const Graph&)>& want,
                                      const std::function<bool(const Graph&)>& recheck) {
  if (n_max > generation_cap(Filter::two_connected)) {
    throw CapacityError("separation search supports n <= " + std::to_string(generation_cap(Filter::two_connected)));
  }
  Stopwatch clock;
  SeparationRecord rec;
  rec.query = query;
  rec.n_max = n_max;
  struct Found {};
  try {
    for (int n = std::max(3, n_min); n <= n_max; ++n) {
      enumerate_into(n, Filter::two_connected, [&](const Graph& g) {
        ++rec.scanned;
        if (!want(g)) return;
        rec.found = true;
        rec.g6 = to_graph6(g);
        rec.profile = profile(g);
        rec.reverified = recheck(g);
        throw Found{};
      });
    }
    rec.exhausted_at = n_max;
  } catch (const Found&) {
  }
  rec.wall_time_s = clock.seconds();
  return rec;
}

}  // namespace detail

/// First 2-connected graph containing p that is p-f-heavy but not
/// p-o-heavy (or the reverse), or exhaustion up to n_max.
inline SeparationRecord search_separation(const Pattern& p, Direction dir, int n_max) {
  auto fast = [&](const Graph& g) {
    if (is_free(g, p)) return false;
    const bool o = is_o_heavy(g, p);
    const bool f = is_f_heavy(g, p);
    return dir == Direction::f_not_o ? (f && !o) : (o && !f);
  };
  auto reference = [&](const Graph& g) {
    const PatternStatus s = brute::status(g, p);
    return is_2connected(g) && !s.free && (dir == Direction::f_not_o ? (s.f_heavy && !s.o_heavy) : (s.o_heavy && !s.f_heavy));
  };
  return detail::first_witness(p.name + ":" + to_string(dir), p.order(), n_max, fast, reference);
}

/// First 2-connected graph that is sub-f-heavy but not super-f-heavy.
inline SeparationRecord search_f_nonmonotone(const Pattern& sub, const Pattern& super, int n_max) {
  auto fast = [&](const Graph& g) { return is_f_heavy(g, sub) && !is_f_heavy(g, super); };
  auto reference = [&](const Graph& g) {
    return is_2connected(g) && brute::status(g, sub).f_heavy && !brute::status(g, super).f_heavy;
  };
  return detail::first_witness(sub.name + "-f-heavy-not-" + super.name + "-f-heavy", super.order(), n_max, fast,
                               reference);
}

// ---------------------------------------------------------------------------
// Lemma sweeps

struct SweepCounts {
  std::string check;
  int n_min = 0;
  int n_max = 0;
  std::string corpus;
  long graphs = 0;
  long instances = 0;  // (graph, cycle[, path]) tuples examined
  long hypothesis_hits = 0;
  long confirmed = 0;
  long skipped = 0;
  long violated = 0;
  std::vector<std::string> violations;
  double wall_time_s = 0;
};

struct SweepOptions {
  int n_min = 3;
  int n_max = 7;
  int merge_n_max = 7;       // upper order for the cycle-merge check
  int merge_all_cycles_n_max = 6;  // also run the merge check on every cycle up to this order
  std::size_t keep = 50;
};

namespace detail {

inline void note_violation(SweepCounts& c, const Graph& g, const std::string& why, std::size_t keep) {
  ++c.violated;
  if (c.violations.size() < keep) c.violations.push_back(to_graph6(g) + ": " + why);
}

// Paths from x through vertices off c, ending on c at a vertex other than x.
template <class Visit>
void for_each_attached_path(const Graph& g, const Cycle& c, Vertex x, Visit&& visit) {
  const VertexSet on = c.vertex_set();
  const VertexSet off = g.vertices() - on;
  std::vector<Vertex> path{x};
  auto dfs = [&](auto& self, VertexSet used) -> void {
    const Vertex end = path.back();
    for (Vertex w : g.neighbors(end)) {
      if (used.contains(w)) continue;
      if (on.contains(w)) {
        if (path.size() >= 2) {
          path.push_back(w);
          visit(Path{path});
          path.pop_back();
        }
      } else if (off.contains(w)) {
        path.push_back(w);
        self(self, used | VertexSet::single(w));
        path.pop_back();
      }
    }
  };
  dfs(dfs, VertexSet::single(x));
}

// Memoised good-pair tests on one oriented cycle, keyed by (centre, forward
// end, backward end).
class GoodPairTable {
 public:
  GoodPairTable(const Graph& g, const Cycle& c) : g_(g), c_(c) {}

  const std::optional<GoodPairWitness>& get(Vertex x, Vertex fwd, Vertex back) {
    const int key = (x * 64 + fwd) * 64 + back;
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, good_pair_witness(g_, c_, x, fwd, back)).first;
    return it->second;
  }

 private:
  const Graph& g_;
  const Cycle& c_;
  std::map<int, std::optional<GoodPairWitness>> memo_;
};

// Runs the merge check on every attached path of c for which good pairs on
// both sides exist in the required cyclic order.
inline void merge_on_cycle(const Graph& g, const Cycle& c, SweepCounts& counts, const CycleSolver& solver,
                           std::size_t keep) {
  if (c.length() < 4 || c.length() == g.order()) return;
  GoodPairTable table(g, c);
  const int t = c.length();
  for (Vertex x : c.vertices()) {
    const int px = *c.position(x);
    for_each_attached_path(g, c, x, [&](const Path& p) {
      ++counts.instances;
      const Vertex y = p.terminus();
      const int dy = ((*c.position(y) - px) % t + t) % t;
      // x1 = x + a, y1 = y - a2 (a + a2 <= dy); x2 = x - b, y2 = y + b2 (b + b2 <= t - dy).
      for (int a = 1; a < dy; ++a) {
        for (int b = 1; b < t - dy; ++b) {
          const auto& wx = table.get(x, c.at(px + a), c.at(px - b));
          if (!wx) continue;
          for (int a2 = 1; a + a2 <= dy; ++a2) {
            for (int b2 = 1; b + b2 <= t - dy; ++b2) {
              const auto& wy = table.get(y, c.at(px + dy + b2), c.at(px + dy - a2));
              if (!wy) continue;
              ++counts.hypothesis_hits;
              const MergeVerdict v = check_merge(g, c, p, *wx, *wy, solver);
              if (v.verdict == Verdict::confirmed) ++counts.confirmed;
              else if (v.verdict == Verdict::skipped) ++counts.skipped;
              else note_violation(counts, g, v.detail, keep);
              return;
            }
          }
        }
      }
    });
  }
}

}  // namespace detail

/// Empirical checks of three facts about long cycles over small graphs:
/// longest cycles are heavy (2-connected, K14-o-heavy graphs), the attachment
/// structure of longest cycles, and cycle merging across good pairs.
inline std::vector<SweepCounts> sweep_lemmas(const SweepOptions& opt, const CycleSolver& solver = exact_solver()) {
  if (opt.n_max > 8) throw CapacityError("lemma sweeps support n <= 8");
  auto counts = [&](const char* check, int hi, const char* corpus) {
    SweepCounts c;
    c.check = check;
    c.n_min = opt.n_min;
    c.n_max = hi;
    c.corpus = corpus;
    return c;
  };
  SweepCounts heavy = counts("longest_cycle_heavy", opt.n_max, "2conn");
  SweepCounts attach = counts("longest_cycle_attachments", opt.n_max, "connected");
  SweepCounts merge = counts("cycle_merge_longest", std::min(opt.n_max, opt.merge_n_max), "2conn");
  SweepCounts merge_all = counts("cycle_merge_all_cycles", std::min(opt.n_max, opt.merge_all_cycles_n_max), "2conn");

  for (int n = std::max(3, opt.n_min); n <= opt.n_max; ++n) {
    detail::Stopwatch t_heavy;
    enumerate_into(n, Filter::two_connected, [&](const Graph& g) {
      ++heavy.graphs;
      ++heavy.instances;
      const LemmaVerdict v = check_longest_cycles_heavy(g, solver);
      if (v.verdict == Verdict::confirmed) {
        ++heavy.confirmed;
        ++heavy.hypothesis_hits;
      } else if (v.verdict == Verdict::skipped) {
        ++heavy.skipped;
      } else {
        ++heavy.hypothesis_hits;
        detail::note_violation(heavy, g, v.detail, opt.keep);
      }
    });
    heavy.wall_time_s += t_heavy.seconds();

    detail::Stopwatch t_attach;
    enumerate_into(n, Filter::connected, [&](const Graph& g) {
      auto longest = solver.longest_cycle(g);
      if (!longest) return;
      ++attach.graphs;
      for_each_cycle(g, longest->length(), [&](const Cycle& c) {
        ++attach.instances;
        const LemmaVerdict v = check_attachments(g, c);
        if (v.verdict == Verdict::confirmed) {
          ++attach.confirmed;
          ++attach.hypothesis_hits;
        } else if (v.verdict == Verdict::skipped) {
          ++attach.skipped;
        } else {
          ++attach.hypothesis_hits;
          detail::note_violation(attach, g, v.detail, opt.keep);
        }
        return true;
      });
    });
    attach.wall_time_s += t_attach.seconds();

    if (n <= opt.merge_n_max) {
      detail::Stopwatch t_merge;
      enumerate_into(n, Filter::two_connected, [&](const Graph& g) {
        ++merge.graphs;
        auto longest = solver.longest_cycle(g);
        if (!longest) return;
        for_each_cycle(g, longest->length(), [&](const Cycle& c) {
          detail::merge_on_cycle(g, c, merge, solver, opt.keep);
          return true;
        });
      });
      merge.wall_time_s += t_merge.seconds();
    }
    if (n <= opt.merge_all_cycles_n_max) {
      detail::Stopwatch t_all;
      enumerate_into(n, Filter::two_connected, [&](const Graph& g) {
        ++merge_all.graphs;
        for (int len = 4; len < n; ++len) {
          for_each_cycle(g, len, [&](const Cycle& c) {
            detail::merge_on_cycle(g, c, merge_all, solver, opt.keep);
            return true;
          });
        }
      });
      merge_all.wall_time_s += t_all.seconds();
    }
  }
  std::vector<SweepCounts> out{heavy, attach};
  if (opt.n_min <= opt.merge_n_max) out.push_back(merge);
  if (opt.n_min <= opt.merge_all_cycles_n_max) out.push_back(merge_all);
  return out;
}

// ---------------------------------------------------------------------------
// Randomised o-cycle realisation

struct RealizeStats {
  long instances = 0;
  long with_virtual = 0;
  long fast_path = 0;
  long fallback = 0;
  long steps = 0;
  long failures = 0;
  std::vector<std::string> failure_detail;
  std::map<std::string, long> by_density;
  double coverage() const { return instances == 0 ? 1.0 : static_cast<double>(fast_path) / instances; }
};

namespace detail {

// A random cycle of the closure relation with `len` vertices, by randomised
// depth-first search with a node limit.
inline std::optional<std::vector<Vertex>> random_ocycle(const Graph& g, const VirtualEdgeSet& ve, int len,
                                                        std::mt19937_64& rng) {
  const int n = g.order();
  std::uniform_int_distribution<int> pick(0, n - 1);
  long budget = 20000;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Vertex s = pick(rng);
    std::vector<Vertex> path{s};
    bool done = false;
    auto dfs = [&](auto& self, VertexSet used) -> void {
      if (done || --budget < 0) return;
      const Vertex end = path.back();
      if (static_cast<int>(path.size()) == len) {
        done = ve.contains(end, s);
        return;
      }
      std::vector<Vertex> next = (ve.closure_neighbors(end) - used).to_vector();
      std::shuffle(next.begin(), next.end(), rng);
      for (Vertex w : next) {
        path.push_back(w);
        self(self, used | VertexSet::single(w));
        if (done) return;
        path.pop_back();
      }
    };
    dfs(dfs, VertexSet::single(s));
    if (done) return path;
  }
  return std::nullopt;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace detail

/// Realises `count` random valid o-cycles (5 <= n <= 16, densities 0.3, 0.5,
/// 0.7 in rotation) and checks that every result is a cycle of the graph
/// through all o-cycle vertices.
inline RealizeStats realize_random(long count, std::uint64_t seed) {
  RealizeStats st;
  std::mt19937_64 rng(seed);
  const double densities[] = {0.3, 0.5, 0.7};
  std::uniform_int_distribution<int> order(5, 16);
  long attempts = 0;
  while (st.instances < count && attempts < count * 50) {
    ++attempts;
    const double p = densities[st.instances % 3];
    const int n = order(rng);
    const Graph g = detail::random_graph(n, p, rng);
    const VirtualEdgeSet ve(g);
    std::uniform_int_distribution<int> len_dist(3, n);
    const int len = len_dist(rng);
    auto seq = detail::random_ocycle(g, ve, len, rng);
    if (!seq) continue;
    const OCycle oc = validate_ocycle(g, *seq);
    ++st.instances;
    ++st.by_density[std::to_string(p).substr(0, 3)];
    if (oc.virtual_count() > 0) ++st.with_virtual;
    try {
      const Realization r = realize(g, oc);
      const bool ok = is_cycle_in(g, r.cycle.vertices()) && oc.vertex_set().subset_of(r.cycle.vertex_set());
      if (!ok) {
        ++st.failures;
        st.failure_detail.push_back(to_graph6(g) + ": realized cycle failed validation");
      }
      if (r.fast_path) ++st.fast_path; else ++st.fallback;
      st.steps += static_cast<long>(r.trace.size());
    } catch (const Error& e) {
      ++st.failures;
      st.failure_detail.push_back(to_graph6(g) + ": " + e.what());
    }
  }
  return st;
}

}  // namespace hamheavy
