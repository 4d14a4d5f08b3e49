#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "triminor/canon.hpp"
#include "triminor/checks.hpp"
#include "triminor/coloring.hpp"
#include "triminor/density.hpp"
#include "triminor/generate.hpp"
#include "triminor/graph6.hpp"
#include "triminor/minors.hpp"
#include "triminor/named.hpp"
#include "triminor/report.hpp"
#include "triminor/rigidity.hpp"

using namespace triminor;

namespace {

constexpr int kExitClaimViolated = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string input;
  std::vector<std::string> graphs;
  std::vector<std::string> named;
  std::string output;
  int workers = 1;
  std::uint64_t seed = 1;
  bool no_timing = false;
};

struct InputGraph {
  std::string text;
  Graph graph;
};

// "multipartite:2,2,2,2,2" or "petersen"
Graph parse_named(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<long long> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    for (std::string item; std::getline(ss, item, ',');) {
      long long v = 0;
      const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || p != item.data() + item.size()) throw UsageError("bad parameter '" + item + "' in --named " + spec);
      params.push_back(v);
    }
  }
  return named_graph(name, params);
}

std::vector<InputGraph> load_inputs(const Globals& g) {
  std::vector<InputGraph> out;
  if (!g.input.empty()) {
    std::vector<CorpusEntry> entries;
    if (g.input == "-") {
      entries = read_corpus(std::cin, "<stdin>");
    } else {
      entries = read_corpus(std::filesystem::path(g.input));
    }
    for (auto& e : entries) out.push_back({e.text, std::move(e.graph)});
  }
  for (const auto& t : g.graphs) out.push_back({t, parse_graph6(t)});
  for (const auto& t : g.named) {
    Graph graph = parse_named(t);
    out.push_back({write_graph6(graph), std::move(graph)});
  }
  if (out.empty()) throw UsageError("no input graphs: give --input, --graph or --named");
  return out;
}

Graph parse_pattern(const std::string& text) {
  if (text.size() >= 2 && (text[0] == 'K' || text[0] == 'k')) {
    int r = 0;
    const auto [p, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), r);
    if (ec == std::errc() && p == text.data() + text.size()) {
      if (r < 1 || r > 16) throw UsageError("pattern K" + std::to_string(r) + " out of range");
      return complete_graph(r);
    }
  }
  return parse_graph6(text);
}

GenStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return GenStrategy::automatic;
  if (s == "direct") return GenStrategy::direct;
  if (s == "complement") return GenStrategy::complement;
  throw UsageError("unknown strategy '" + s + "' (auto, direct, complement)");
}

std::string describe_coloring(const std::vector<int>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minor, triangle and stress computations on small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--input", g.input, "graph6 corpus file, or - for standard input");
  app.add_option("--graph", g.graphs, "inline graph6 token (repeatable)");
  app.add_option("--named", g.named, "catalog graph, e.g. multipartite:2,2,2,2,2 (repeatable)");
  app.add_option("--output", g.output, "write to this file instead of standard output");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "seed for randomized steps");
  app.add_flag("--no-timing", g.no_timing, "write millis as 0 so reports are byte-stable");

  auto* gen = app.add_subcommand("gen", "enumerate graphs up to isomorphism");
  int gen_n = 0, gen_d = 0;
  std::string gen_prune = "none", gen_strategy = "auto";
  std::optional<int> gen_max_edges;
  bool gen_count = false;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--min-degree", gen_d, "minimum degree");
  gen->add_option("--prune", gen_prune, "none, K4..K8 or edge-cap");
  gen->add_option("--max-edges", gen_max_edges, "edge cap");
  gen->add_option("--strategy", gen_strategy, "auto, direct or complement");
  gen->add_flag("--count-only", gen_count, "print the class count only");

  auto* minor = app.add_subcommand("minor", "exact minor test");
  std::string pattern;
  minor->add_option("--pattern", pattern, "Kr or a graph6 pattern")->required();

  auto* tri = app.add_subcommand("triangles", "edge with fewest triangles");
  std::optional<int> tri_cap, tri_r;
  tri->add_option("--cap", tri_cap, "only edges with an endpoint of degree <= cap");
  tri->add_option("--r", tri_r, "for K_r-minor-free inputs, fail when the minimum exceeds r-3");

  auto* verify = app.add_subcommand("verify", "run a named check");
  std::string check_id;
  std::optional<int> check_n;
  int samples = 0;
  bool long_jobs = false;
  std::string corpus;
  verify->add_option("--check", check_id, "check id")->required();
  verify->add_option("--n", check_n, "order for lemma-compk8");
  verify->add_option("--samples", samples, "sample count for randomized checks");
  verify->add_flag("--long", long_jobs, "allow long jobs (lemma-compk8 at n=11)");
  verify->add_option("--corpus", corpus, "graph6 corpus for the neighbourhood checks");

  auto* rig = app.add_subcommand("rigidity", "generic stress dimension over a prime field");
  int rig_d = 3, rig_trials = 3;
  rig->add_option("--d", rig_d, "dimension 1..8");
  rig->add_option("--trials", rig_trials, "random embeddings");

  auto* chroma = app.add_subcommand("chroma", "exact chromatic number");

  auto* dens = app.add_subcommand("density", "triangle density premise against the clique minor");
  int dens_k = 0;
  dens->add_option("--k", dens_k, "k in 4..8")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::ofstream file;
  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) {
      std::cerr << "cannot open " << g.output << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& out = g.output.empty() ? std::cout : file;
  ReportWriter writer(out, !g.no_timing);

  try {
    if (gen->parsed()) {
      GenSpec spec;
      spec.n = gen_n;
      spec.min_degree = gen_d;
      spec.prune = parse_prune(gen_prune);
      spec.max_edges = gen_max_edges;
      spec.strategy = parse_strategy(gen_strategy);
      if (gen_count) {
        out << generate_count(spec, g.workers) << '\n';
      } else {
        generate(spec, [&](const Graph& h) { out << write_graph6(h) << '\n'; }, g.workers);
      }
      return 0;
    }
    if (verify->parsed()) {
      CheckParams params;
      params.n = check_n;
      params.long_jobs = long_jobs;
      params.workers = g.workers;
      params.seed = g.seed;
      params.samples = samples;
      if (!corpus.empty()) params.corpus = corpus;
      const bool ok = run_check(parse_check_id(check_id), params, [&](const ReportLine& l) { writer.write(l); });
      return ok ? 0 : kExitClaimViolated;
    }

    const auto inputs = load_inputs(g);
    auto timed = [&](const std::string& check, const InputGraph& in, auto&& body) {
      const auto t0 = std::chrono::steady_clock::now();
      auto [verdict, witness] = body(in.graph);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      writer.write(ReportLine(check, in.text, verdict, witness, ms));
    };
    using Result = std::pair<Verdict, std::string>;

    if (minor->parsed()) {
      const Graph h = parse_pattern(pattern);
      for (const auto& in : inputs) {
        timed("minor", in, [&](const Graph& host) -> Result {
          if (auto w = has_minor(host, h)) return {Verdict::witness, format_witness(*w)};
          return {Verdict::pass, "none"};
        });
      }
    } else if (tri->parsed()) {
      for (const auto& in : inputs) {
        timed("triangles", in, [&](const Graph& host) -> Result {
          const auto rep = min_triangle_edge(host, tri_cap);
          if (rep.per_edge.empty()) return {Verdict::pass, "no qualifying edge"};
          std::string w = "min=" + std::to_string(rep.min_count) + " edge=" + std::to_string(rep.witness.u) + "-" +
                          std::to_string(rep.witness.v);
          if (tri_r && rep.min_count > *tri_r - 3 && is_kr_minor_free(host, *tri_r)) {
            return {Verdict::fail, w + " exceeds r-3 on a K" + std::to_string(*tri_r) + "-minor-free graph"};
          }
          return {Verdict::pass, w};
        });
      }
    } else if (rig->parsed()) {
      for (const auto& in : inputs) {
        timed("rigidity", in, [&](const Graph& host) -> Result {
          const auto v = stress_space_dim(host, rig_d, g.seed, rig_trials);
          const auto red = whiteley_reduce(host, rig_d);
          std::ostringstream w;
          w << (v.stress_free() ? "stress-free" : "stressed") << " dim=" << v.dimension << " trials=" << v.trials
            << " error<=" << v.error_bound << " reduced-order=" << red.graph.order()
            << " reduced-edges=" << red.graph.edge_count();
          // a full contraction down to an edgeless graph certifies stress freeness, so a
          // positive dimension alongside it means one of the two computations is wrong
          if (red.graph.edge_count() == 0 && !v.stress_free()) return {Verdict::fail, w.str() + " contradicts contraction"};
          return {Verdict::pass, w.str()};
        });
      }
    } else if (chroma->parsed()) {
      for (const auto& in : inputs) {
        timed("chroma", in, [&](const Graph& host) -> Result {
          const auto c = chromatic_number(host);
          return {Verdict::pass, "chi=" + std::to_string(c.chromatic_number) + " coloring=" + describe_coloring(c.coloring)};
        });
      }
    } else if (dens->parsed()) {
      for (const auto& in : inputs) {
        timed("density", in, [&](const Graph& host) -> Result {
          const auto v = density_conclusion(host, dens_k);
          std::string w = "premise=" + std::string(v.premise ? "true" : "false") + " t=" + std::to_string(v.triangles) +
                          " m=" + std::to_string(v.edges) + " slack=" + std::to_string(v.slack) +
                          " minor=" + (v.witness ? format_witness(*v.witness) : std::string("none"));
          return {v.consistent() ? Verdict::pass : Verdict::fail, w};
        });
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // GraphError, GenError, CheckError, MinorSearchError
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return writer.failures() == 0 ? 0 : kExitClaimViolated;
}
