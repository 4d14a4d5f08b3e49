#include <algorithm>
#include <numeric>
#include <random>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "triminor/canon.hpp"
#include "triminor/named.hpp"

using namespace triminor;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return relabel(g, p);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("certificates are relabeling invariant") {
  std::mt19937_64 rng(2);
  const Graph c5 = cycle_graph(5);
  for (int i = 0; i < 20; ++i) CHECK(canonical_cert(shuffled(c5, rng)) == canonical_cert(c5));
  CHECK(canonical_cert(path_graph(4)) != canonical_cert(star_graph(3)));
  CHECK(canonical_cert(c5).bytes[0] == 5);
  CHECK(canonical_cert(c5).bytes.size() == 1 + 2);

  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Graph g = random_graph(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng);
    const Graph h = shuffled(g, rng);
    CHECK(canonical_cert(g) == canonical_cert(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
  }
}

TEST_CASE("highly symmetric and refinement-resistant graphs") {
  std::mt19937_64 rng(4);
  const std::vector<Graph> hard{
      petersen(),
      petersen_complement(),
      complete_multipartite({2, 2, 2, 2, 2}),
      complete_multipartite({3, 3, 3}),
      cycle_graph(64),
      complete_graph(64),
      Graph(64),
      disjoint_union(cycle_graph(3), cycle_graph(4)),
      cycle_graph(7),
      disjoint_union(cycle_graph(5), cycle_graph(5)),
      disjoint_union(disjoint_union(cycle_graph(7), cycle_graph(7)), cycle_graph(7)),
  };
  for (const auto& g : hard) {
    const auto cert = canonical_cert(g);
    for (int i = 0; i < 10; ++i) CHECK(canonical_cert(shuffled(g, rng)) == cert);
  }
  CHECK_FALSE(is_isomorphic(disjoint_union(cycle_graph(3), cycle_graph(4)), cycle_graph(7)));
  CHECK_FALSE(is_isomorphic(complete_multipartite({3, 3}), cycle_graph(6)));
  CHECK(is_isomorphic(petersen_complement(), complement(petersen())));
  CHECK(is_isomorphic(double_axle_wheel(4), complete_multipartite({2, 2, 2})));
  CHECK(oracle::isomorphic(double_axle_wheel(4), complete_multipartite({2, 2, 2})));
}

TEST_CASE("labeling and automorphisms are consistent") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 14), 0.5, rng);
    const auto form = canonical_form(g);
    std::vector<int> sorted = form.labeling;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < g.order(); ++i) REQUIRE(sorted[static_cast<std::size_t>(i)] == i);
    for (const auto& gamma : form.automorphisms) CHECK(relabel(g, gamma) == g);
  }
  for (const auto& gamma : canonical_form(petersen()).automorphisms) CHECK(relabel(petersen(), gamma) == petersen());
}

TEST_CASE("exactly 156 classes on 6 vertices, matching brute-force relabeling") {
  std::set<CanonicalCert> certs;
  std::set<std::uint32_t> codes;
  std::map<std::uint32_t, CanonicalCert> by_code;
  bool consistent = true;
  for (const auto& g : oracle::all_labeled_graphs(6)) {
    const auto cert = canonical_cert(g);
    const auto code = oracle::min_relabel_code(g);
    certs.insert(cert);
    codes.insert(code);
    auto [it, fresh] = by_code.emplace(code, cert);
    if (!fresh && it->second != cert) consistent = false;
  }
  CHECK(certs.size() == 156);
  CHECK(codes.size() == 156);
  CHECK(consistent);
}

TEST_CASE("class counts for n <= 5") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    std::set<CanonicalCert> certs;
    for (const auto& g : oracle::all_labeled_graphs(n)) certs.insert(canonical_cert(g));
    CHECK(certs.size() == expected[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("certificate equality agrees with permutation search on random pairs") {
  std::mt19937_64 rng(8);
  int iso = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = (trial % 2 == 0) ? shuffled(g, rng) : random_graph(n, 0.5, rng);
    const bool expected = oracle::isomorphic(g, h);
    iso += expected ? 1 : 0;
    REQUIRE(is_isomorphic(g, h) == expected);
  }
  CHECK(iso > 5000);
}

TEST_CASE("certificates are deterministic") {
  const Graph g = complete_multipartite({3, 3, 3});
  CHECK(canonical_cert(g).bytes == canonical_cert(g).bytes);
}
