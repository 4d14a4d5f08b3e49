// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.

#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "triminor/canon.hpp"
#include "triminor/checks.hpp"
#include "triminor/coloring.hpp"
#include "triminor/graph6.hpp"
#include "triminor/minors.hpp"
#include "triminor/named.hpp"
#include "triminor/rigidity.hpp"
#include "triminor/sampling.hpp"
#include "triminor/witness.hpp"

using namespace triminor;

namespace {

// pinned tolerances
constexpr std::size_t kList22Count = 22;
constexpr std::size_t kWheelCount = 2;
constexpr std::size_t kP10Classes = 6;
constexpr std::size_t kP10Pairs = 60;
constexpr std::size_t kP10Triples = 445;
constexpr int kKtreesPerK = 100;
constexpr int kTriangleSamplesPerR = 1000;
constexpr int kTriangleMaxOrder = 12;
constexpr int kTriangulations = 50;
constexpr int kTriangulationMaxOrder = 12;
constexpr double kStressedErrorBound = 1e-30;
constexpr int kColoringSamples = 1000;
constexpr std::size_t kSixVertexClasses = 156;

struct Result {
  bool ok = true;
  std::string detail;
};

struct Tally {
  int failed = 0;
  void report(int n, const char* what, const std::function<Result()>& body) {
    Result r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.ok) ++failed;
    std::printf("[%s] AC-%d %s%s%s\n", r.ok ? "PASS" : "FAIL", n, what, r.detail.empty() ? "" : " : ", r.detail.c_str());
    std::fflush(stdout);
  }
};

struct CheckRun {
  bool ok = false;
  std::vector<ReportLine> lines;
  std::string summary() const { return lines.empty() ? std::string() : lines.back().witness(); }
  std::string first_failure() const {
    for (const auto& l : lines) {
      if (l.verdict() == Verdict::fail && l.input() != "summary") return l.input() + " " + l.witness();
    }
    return {};
  }
};

CheckRun run(CheckId id, CheckParams p = {}) {
  CheckRun r;
  r.ok = run_check(id, p, [&](const ReportLine& l) { r.lines.push_back(l); });
  return r;
}

Result from_check(const CheckRun& r) {
  std::string d = r.summary();
  if (!r.ok && !r.first_failure().empty()) d += "; first failure " + r.first_failure();
  return {r.ok, d};
}

Graph drop_isolated(const Graph& g) {
  VertexSet keep = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep |= bit(v);
  }
  return induced(g, keep);
}

}  // namespace

int main() {
  Tally t;

  t.report(1, "golden enumeration: 22 classes, n <= 9, min degree 5, no K6 minor", [] {
    const auto r = run(CheckId::list22_r7);
    std::size_t count = 0;
    for (const auto& l : r.lines) count += l.input() != "summary" && l.verdict() == Verdict::pass ? 1 : 0;
    return Result{r.ok && count == kList22Count && r.lines.size() == kList22Count + 1,
                  "classes=" + std::to_string(count) + " expected=" + std::to_string(kList22Count)};
  });

  t.report(2, "double-axle wheels are the K5-minor-free graphs with n in {6,7}, min degree 4", [] {
    const auto r = run(CheckId::wheels_r6);
    Result res = from_check(r);
    res.ok = res.ok && r.lines.size() == kWheelCount + 1;
    return res;
  });

  t.report(3, "apex augmentation on the corpus: |S| <= 5, at most 3 missing edges", [] {
    return from_check(run(CheckId::lemma_compk7));
  });

  t.report(4, "at most one triangle-saturated vertex per corpus graph", [] {
    return from_check(run(CheckId::lemma_numberk7));
  });

  t.report(5, "six induced 6-vertex classes in the Petersen complement, K222 among them", [] {
    const auto r = run(CheckId::claim_p10_subgraphs);
    bool k222 = false;
    std::size_t classes = 0;
    for (const auto& l : r.lines) {
      if (l.input().rfind("P10bar", 0) == 0 || l.input() == "summary") continue;
      ++classes;
      k222 = k222 || l.witness().find("K222") != std::string::npos;
    }
    return Result{r.ok && classes == kP10Classes && k222, r.summary()};
  });

  t.report(6, "edge additions to the Petersen complement create validated K7 minors", [] {
    const auto r = run(CheckId::claim_2edge_p10);
    const std::string want = "count=" + std::to_string(kP10Pairs + kP10Triples) + " pairs=" + std::to_string(kP10Pairs) +
                             " triples=" + std::to_string(kP10Triples);
    return Result{r.ok && r.summary() == want, r.summary()};
  });

  t.report(7, "K8 neighbourhood lemma at n = 8, 9, 10 with exceptional triangle counts 4, 3, 3", [] {
    const auto r = run(CheckId::lemma_compk8);
    int exceptional = 0;
    for (const auto& l : r.lines) {
      const auto& w = l.witness();
      exceptional += w == "exceptional K2222 triangles=4" || w == "exceptional K333 triangles=3" ||
                     w == "exceptional P10bar triangles=3";
    }
    Result res = from_check(r);
    res.ok = res.ok && exceptional == 3;
    res.detail += " exceptional=" + std::to_string(exceptional);
    return res;
  });

  t.report(8, "k-tree triangle formula, 100 random k-trees per k in 2..6, n <= 20", [] {
    CheckParams p;
    p.samples = kKtreesPerK;
    return from_check(run(CheckId::density_ktree, p));
  });

  t.report(9, "low-degree edge in at most r-3 triangles on sampled K_r-minor-free graphs", [] {
    for (int r = 5; r <= 7; ++r) {
      for (int i = 0; i < kTriangleSamplesPerR; ++i) {
        const std::uint64_t seed = sample_seed(static_cast<std::uint64_t>(900 + r), static_cast<std::uint64_t>(i));
        const int n = r + static_cast<int>(seed % static_cast<unsigned>(kTriangleMaxOrder - r + 1));
        const auto g = random_minor_free_graph(n, r, seed);
        if (!g) return Result{false, "sampler gave up at r=" + std::to_string(r)};
        const Graph h = drop_isolated(*g);
        if (h.edge_count() == 0) continue;
        const auto rep = min_triangle_edge(h, 2 * r - 5);
        if (rep.per_edge.empty() || rep.min_count > r - 3) {
          return Result{false, write_graph6(*g) + " r=" + std::to_string(r) + " min=" + std::to_string(rep.min_count)};
        }
      }
    }
    return Result{true, "samples=" + std::to_string(3 * kTriangleSamplesPerR)};
  });

  t.report(10, "stress freeness: K22222 stressed at d=6, triangulations free at d=3, corpus free at d=5", [] {
    const auto k = stress_space_dim(complete_multipartite({2, 2, 2, 2, 2}), 6, 1);
    if (k.stress_free() || k.dimension < 1 || k.error_bound > kStressedErrorBound) {
      return Result{false, "K22222 dim=" + std::to_string(k.dimension)};
    }
    for (int i = 0; i < kTriangulations; ++i) {
      const int n = 4 + i % (kTriangulationMaxOrder - 3);
      const Graph g = random_planar_triangulation(n, sample_seed(31, static_cast<std::uint64_t>(i)));
      const auto v = stress_space_dim(g, 3, static_cast<std::uint64_t>(i));
      if (!v.stress_free()) return Result{false, "triangulation " + write_graph6(g)};
    }
    const auto corpus = list22_corpus();
    for (const auto& g : corpus) {
      if (!stress_space_dim(g, 5, 2).stress_free()) return Result{false, "corpus " + write_graph6(g) + " stressed"};
      if (whiteley_reduce(g, 5).graph.order() != 1) return Result{false, "corpus " + write_graph6(g) + " does not contract away"};
    }
    return Result{true, "K22222 dim=" + std::to_string(k.dimension) + " corpus=" + std::to_string(corpus.size())};
  });

  t.report(11, "chromatic bounds 8 and 10 on sampled K7- and K8-minor-free graphs, n <= 14", [] {
    CheckParams p;
    p.samples = kColoringSamples;
    return from_check(run(CheckId::coloring_bound, p));
  });

  t.report(12, "minor search and canonical certificates against brute force", [] {
    std::size_t compared = 0;
    for (int n = 1; n <= 6; ++n) {
      std::map<std::uint32_t, std::array<bool, 3>> oracle_by_class;
      for (const auto& g : oracle::all_labeled_graphs(n)) {
        const auto code = oracle::min_relabel_code(g);
        auto it = oracle_by_class.find(code);
        if (it == oracle_by_class.end()) {
          std::array<bool, 3> v{};
          for (int r = 3; r <= 5; ++r) v[static_cast<std::size_t>(r - 3)] = oracle::has_minor(g, complete_graph(r));
          it = oracle_by_class.emplace(code, v).first;
        }
        for (int r = 3; r <= 5; ++r) {
          const auto w = has_clique_minor(g, r);
          if (w.has_value() != it->second[static_cast<std::size_t>(r - 3)]) {
            return Result{false, write_graph6(g) + " K" + std::to_string(r)};
          }
          if (w && !validate_minor_witness(g, *w)) return Result{false, write_graph6(g) + " invalid witness"};
          ++compared;
        }
      }
    }
    std::map<CanonicalCert, std::uint32_t> cert_to_code;
    std::set<std::uint32_t> codes;
    for (const auto& g : oracle::all_labeled_graphs(6)) {
      const auto code = oracle::min_relabel_code(g);
      codes.insert(code);
      auto [it, fresh] = cert_to_code.emplace(canonical_cert(g), code);
      if (!fresh && it->second != code) return Result{false, "certificate merges two classes at " + write_graph6(g)};
    }
    const bool ok = cert_to_code.size() == kSixVertexClasses && codes.size() == kSixVertexClasses;
    return Result{ok, "minor queries=" + std::to_string(compared) + " classes=" + std::to_string(cert_to_code.size())};
  });

  std::printf("%d criteria failed\n", t.failed);
  return t.failed == 0 ? 0 : 1;
}
