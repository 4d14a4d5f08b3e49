#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "triminor/checks.hpp"
#include "triminor/named.hpp"
#include "triminor/rigidity.hpp"
#include "triminor/sampling.hpp"

using namespace triminor;

namespace {

int components(const Graph& g) {
  int c = 0;
  VertexSet left = g.vertices();
  while (left != 0) {
    VertexSet seen = bit(lowest(left)), frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(lowest(f));
      frontier = next & ~seen;
      seen |= next;
    }
    left &= ~seen;
    ++c;
  }
  return c;
}

// every vertex subset of size k >= 2 spans at most 2k - 3 edges
bool laman_sparse(const Graph& g) {
  const int n = g.order();
  for (VertexSet s = 1; s < bit(n); ++s) {
    const int k = popcount(s);
    if (k >= 2 && g.edges_within(s) > 2 * k - 3) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small stress examples") {
  CHECK(stress_space_dim(complete_graph(2), 1, 1).dimension == 0);
  CHECK(stress_space_dim(complete_graph(2), 1, 1).stress_free());
  const auto k22222 = stress_space_dim(complete_multipartite({2, 2, 2, 2, 2}), 6, 7);
  CHECK_FALSE(k22222.stress_free());
  CHECK(k22222.dimension >= 1);
  CHECK(k22222.trials == 3);
  CHECK(k22222.error_bound < 1e-40);
  CHECK_THROWS_AS(stress_space_dim(complete_graph(3), 0, 1), GraphError);
  CHECK_THROWS_AS(stress_space_dim(complete_graph(3), 9, 1), GraphError);
}

TEST_CASE("complete graphs are rigid: stresses are edges minus dn - C(d+1,2)") {
  for (int d = 1; d <= 5; ++d) {
    for (int n = d + 1; n <= 12; ++n) {
      const auto v = stress_space_dim(complete_graph(n), d, static_cast<std::uint64_t>(n * 10 + d));
      CHECK(v.dimension == binomial(n, 2) - (static_cast<long long>(d) * n - binomial(d + 1, 2)));
    }
  }
}

TEST_CASE("d = 1 stresses are the cycle space") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 12), 0.4, rng());
    CHECK(stress_space_dim(g, 1, rng()).dimension == g.edge_count() - g.order() + components(g));
  }
}

TEST_CASE("d = 2 agrees with Laman sparsity") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.5, rng());
    CHECK(stress_space_dim(g, 2, rng()).stress_free() == laman_sparse(g));
  }
}

TEST_CASE("degenerate embedding drops the rank") {
  const Graph g = complete_graph(5);
  CHECK(stress_matrix_rank(g, 3, std::vector<std::uint64_t>(15, 42)) == 0);
  // moment curve points are in general position
  std::vector<std::uint64_t> coords;
  for (std::uint64_t t = 1; t <= 5; ++t) {
    for (std::uint64_t x : {t, t * t, t * t * t}) coords.push_back(x);
  }
  CHECK(stress_matrix_rank(g, 3, coords) == 9);
  // all five in one plane: the framework flexes and K5 keeps an extra stress
  std::vector<std::uint64_t> flat;
  for (std::uint64_t t = 1; t <= 5; ++t) {
    for (std::uint64_t x : {t, t * t, std::uint64_t{0}}) flat.push_back(x);
  }
  CHECK(stress_matrix_rank(g, 3, flat) == 7);
}

TEST_CASE("edge bound forces stresses") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const int n = d + 1 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, 0.8, rng());
    const long long excess = g.edge_count() - (static_cast<long long>(d) * n - binomial(d + 1, 2));
    CHECK(stress_space_dim(g, d, rng()).dimension >= std::max(0LL, excess));
  }
}

TEST_CASE("planar triangulations are 3-stress free") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const int n = 4 + static_cast<int>(i % 9);
    const Graph g = random_planar_triangulation(n, sample_seed(11, i));
    REQUIRE(g.edge_count() == 3 * n - 6);
    CHECK(stress_space_dim(g, 3, i).dimension == 0);
  }
}

TEST_CASE("seeds agree and verdicts are reproducible") {
  const Graph g = complete_multipartite({2, 2, 2, 2, 2});
  const auto a = stress_space_dim(g, 5, 99);
  const auto b = stress_space_dim(g, 5, 99);
  CHECK(a.dimension == b.dimension);
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(stress_space_dim(g, 5, s).dimension == a.dimension);
}

TEST_CASE("contraction reduction") {
  auto tree = whiteley_reduce(path_graph(7), 2);
  CHECK(tree.graph.order() == 1);
  CHECK(tree.log.size() == 6);
  const Graph k22222 = complete_multipartite({2, 2, 2, 2, 2});
  auto same = whiteley_reduce(k22222, 6);
  CHECK(same.log.empty());
  CHECK(same.graph == k22222);
  auto first = whiteley_reduce(complete_graph(4), 3);
  REQUIRE_FALSE(first.log.empty());
  CHECK(first.log[0].edge == Edge{0, 1});
  CHECK(first.log[0].common_neighbors == 2);
}

TEST_CASE("corpus graphs contract away at d = 5 and are 5-stress free") {
  for (const auto& g : list22_corpus()) {
    const auto red = whiteley_reduce(g, 5);
    CHECK(red.graph.order() == 1);
    CHECK(stress_space_dim(g, 5, 1).dimension == 0);
    for (int d = 3; d <= 6; ++d) {
      if (whiteley_reduce(g, d).graph.order() == 1) CHECK(stress_space_dim(g, d, 2).dimension == 0);
    }
  }
}
