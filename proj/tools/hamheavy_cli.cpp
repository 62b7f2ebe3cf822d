#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamheavy/report.hpp"

using namespace hamheavy;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitCounterexample = 2;
constexpr int kExitPrecondition = 3;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

// Writes to the file when a path is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) file_ = open_out(path);
  }
  std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<Vertex> parse_seq(const std::string& text) {
  std::vector<Vertex> seq;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      seq.push_back(v);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad vertex '" + item + "' in --seq");
    }
  }
  return seq;
}

int run_enumerate(int n, const std::string& filter, const std::string& out_path) {
  const Filter f = parse_filter(filter);
  Sink sink(out_path);
  std::ostream& out = sink.get();
  std::size_t count = 0;
  enumerate_into(n, f, [&](const Graph& g) {
    out << to_graph6(g) << '\n';
    ++count;
  });
  if (!out) throw Error("write failed");
  std::cerr << "enumerate: " << count << " graphs (n=" << n << ", filter=" << to_string(f) << ")\n";
  return kExitClean;
}

int run_classify(const std::string& in_path, int gen, const std::string& filter, const std::string& out_path,
                 unsigned threads) {
  GraphStream in = in_path.empty() ? GraphStream::generated(gen, parse_filter(filter)) : GraphStream::file(in_path);
  Sink sink(out_path);
  const std::size_t count = classify_stream(in, sink.get(), threads);
  std::cerr << "classify: " << count << " profiles from " << in.provenance() << "\n";
  return kExitClean;
}

int run_verify(const std::string& theorem, int n_min, int n_max, const std::string& in_path,
               const std::string& report, unsigned threads) {
  const auto specs = select_theorems(theorem);
  CorpusSpec corpus{n_min, n_max, std::nullopt};
  if (!in_path.empty()) corpus.file = in_path;
  VerifyOptions opt;
  opt.threads = threads;
  const auto records = verify_theorems(specs, corpus, opt);
  Sink sink(report);
  bool dirty = false;
  for (const auto& r : records) {
    sink.get() << to_json(r).dump() << '\n';
    std::cerr << r.theorem << ": hits=" << r.hypothesis_hits << " counterexamples=" << r.counterexample_count;
    if (r.below_floor_count > 0) std::cerr << " below_floor=" << r.below_floor_count;
    if (!r.discrepancies.empty()) std::cerr << " discrepancies=" << r.discrepancies.size();
    std::cerr << "\n";
    dirty = dirty || r.counterexample_count > 0 || !r.discrepancies.empty();
  }
  return dirty ? kExitCounterexample : kExitClean;
}

int emit_separation(const SeparationRecord& r, const std::string& report) {
  Sink sink(report);
  sink.get() << to_json(r).dump() << '\n';
  if (r.found) {
    std::cerr << r.query << ": witness " << r.g6 << (r.reverified ? " (re-verified)" : " (NOT re-verified)") << "\n";
    return r.reverified ? kExitClean : kExitCounterexample;
  }
  std::cerr << r.query << ": exhausted at n=" << r.exhausted_at << "\n";
  return kExitClean;
}

int run_lemmas(int n_max, int merge_n_max, int merge_all_n_max, const std::string& report) {
  SweepOptions opt;
  opt.n_max = n_max;
  opt.merge_n_max = merge_n_max;
  opt.merge_all_cycles_n_max = merge_all_n_max;
  const auto counts = sweep_lemmas(opt);
  Sink sink(report);
  bool dirty = false;
  for (const auto& c : counts) {
    sink.get() << to_json(c).dump() << '\n';
    std::cerr << c.check << ": instances=" << c.instances << " hits=" << c.hypothesis_hits
              << " violated=" << c.violated << "\n";
    dirty = dirty || c.violated > 0;
  }
  return dirty ? kExitCounterexample : kExitClean;
}

int run_realize(const std::string& g6, const std::string& seq_text) {
  const Graph g = parse_graph6(g6);
  const OCycle oc = validate_ocycle(g, parse_seq(seq_text));
  const Realization r = realize(g, oc);
  std::cout << to_json(r).dump() << '\n';
  return kExitClean;
}

int run_realize_random(long count, std::uint64_t seed, const std::string& report) {
  const RealizeStats st = realize_random(count, seed);
  Sink sink(report);
  sink.get() << to_json(st).dump() << '\n';
  std::cerr << "realize: " << st.instances << " instances, coverage " << st.coverage() << ", failures "
            << st.failures << "\n";
  return st.failures > 0 ? kExitCounterexample : kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive checks of heavy-subgraph Hamiltonicity conditions on small graphs"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  int en = 0;
  std::string efilter = "all", eout;
  auto* enumerate = app.add_subcommand("enumerate", "emit non-isomorphic graphs of one order as graph6");
  enumerate->add_option("--n", en, "order")->required()->check(CLI::Range(1, 10));
  enumerate->add_option("--filter", efilter, "all|connected|2conn")->check(CLI::IsMember({"all", "connected", "2conn"}));
  enumerate->add_option("--out", eout, "output file (default stdout)");

  std::string cin_path, cfilter = "2conn", cout_path;
  int cgen = 0;
  auto* classify = app.add_subcommand("classify", "write a condition profile per graph as JSONL");
  auto* cin_opt = classify->add_option("--in", cin_path, "graph6 input file");
  auto* cgen_opt = classify->add_option("--gen", cgen, "generate every graph of this order")->check(CLI::Range(1, 10));
  cin_opt->excludes(cgen_opt);
  classify->add_option("--filter", cfilter, "filter for --gen")->check(CLI::IsMember({"all", "connected", "2conn"}));
  classify->add_option("--out", cout_path, "output file")->required();

  std::string vtheorem, vin, vreport;
  int vn_max = 0, vn_min = 3;
  auto* verify = app.add_subcommand("verify", "check Hamiltonicity implications over a corpus");
  verify->add_option("--theorem", vtheorem, "t1,t3,t4,t6..t17,co1..co3,ore,fan,k13o-z3f or all")->required();
  verify->add_option("--n-max", vn_max, "largest order")->required();
  verify->add_option("--n-min", vn_min, "smallest order");
  verify->add_option("--in", vin, "graph6 corpus instead of generation");
  verify->add_option("--report", vreport, "JSONL report")->required();

  std::string spattern, sdirection, sreport;
  int sn_max = 0;
  auto* separate = app.add_subcommand("separate", "first graph separating o-heavy from f-heavy for a pattern");
  separate->add_option("--pattern", spattern, "catalog pattern")->required();
  separate->add_option("--direction", sdirection, "f-not-o|o-not-f")->required();
  separate->add_option("--n-max", sn_max, "largest order")->required();
  separate->add_option("--report", sreport, "JSONL report (default stdout)");

  std::string msub, msuper, mreport;
  int mn_max = 0;
  auto* monotone = app.add_subcommand("monotone", "first graph that is sub-f-heavy but not super-f-heavy");
  monotone->add_option("--sub", msub, "induced subpattern")->required();
  monotone->add_option("--super", msuper, "pattern containing it")->required();
  monotone->add_option("--n-max", mn_max, "largest order")->required();
  monotone->add_option("--report", mreport, "JSONL report (default stdout)");

  int ln_max = 0, lmerge = 8, lmerge_all = 7;
  std::string lreport;
  auto* lemmas = app.add_subcommand("lemmas", "sweep long-cycle structure checks");
  lemmas->add_option("--n-max", ln_max, "largest order")->required()->check(CLI::Range(3, 8));
  lemmas->add_option("--merge-n-max", lmerge, "largest order for the merge check on longest cycles");
  lemmas->add_option("--merge-all-n-max", lmerge_all, "largest order for the merge check on every cycle");
  lemmas->add_option("--report", lreport, "JSONL report")->required();

  std::string rg6, rseq;
  auto* realize_cmd = app.add_subcommand("realize-ocycle", "turn an o-cycle into a real cycle");
  realize_cmd->add_option("--g6", rg6, "graph6 line")->required();
  realize_cmd->add_option("--seq", rseq, "comma-separated vertices")->required();

  long rcount = 1000;
  std::uint64_t rseed = 1;
  std::string rreport;
  auto* realize_random_cmd = app.add_subcommand("realize-random", "realize random o-cycles and report coverage");
  realize_random_cmd->add_option("--count", rcount, "instances")->check(CLI::PositiveNumber);
  realize_random_cmd->add_option("--seed", rseed, "random seed");
  realize_random_cmd->add_option("--report", rreport, "JSONL report (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitPrecondition;
  }

  try {
    if (*enumerate) return run_enumerate(en, efilter, eout);
    if (*classify) {
      if (cin_opt->count() == 0 && cgen_opt->count() == 0) throw PreconditionError("classify needs --in or --gen");
      return run_classify(cin_path, cgen, cfilter, cout_path, threads);
    }
    if (*verify) return run_verify(vtheorem, vn_min, vn_max, vin, vreport, threads);
    if (*separate) {
      return emit_separation(search_separation(catalog_pattern(lower(spattern)), parse_direction(sdirection), sn_max),
                             sreport);
    }
    if (*monotone) {
      return emit_separation(
          search_f_nonmonotone(catalog_pattern(lower(msub)), catalog_pattern(lower(msuper)), mn_max), mreport);
    }
    if (*lemmas) return run_lemmas(ln_max, lmerge, lmerge_all, lreport);
    if (*realize_cmd) return run_realize(rg6, rseq);
    if (*realize_random_cmd) return run_realize_random(rcount, rseed, rreport);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitClean;
}
