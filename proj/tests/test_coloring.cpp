#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "triminor/coloring.hpp"
#include "triminor/density.hpp"
#include "triminor/minors.hpp"
#include "triminor/named.hpp"
#include "triminor/sampling.hpp"

using namespace triminor;

namespace {

// clique + independent set, by trying every split of the vertex set
bool split_by_partition(const Graph& g) {
  for (VertexSet k = 0; k < bit(g.order()); ++k) {
    const VertexSet i = g.vertices() & ~k;
    if (g.is_clique(k) && g.edges_within(i) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(complete_multipartite({2, 2, 2, 2, 2})).chromatic_number == 5);
  CHECK(chromatic_number(cycle_graph(5)).chromatic_number == 3);
  CHECK(chromatic_number(cycle_graph(6)).chromatic_number == 2);
  const auto p = chromatic_number(petersen());
  CHECK(p.chromatic_number == 3);
  CHECK(is_proper_coloring(petersen(), p.coloring));
  CHECK(oracle::chromatic_number(petersen()) == 3);
  CHECK(chromatic_number(Graph(1)).chromatic_number == 1);
  CHECK(chromatic_number(complete_graph(20)).chromatic_number == 20);
  CHECK_THROWS_AS(chromatic_number(Graph(21)), GraphError);
}

TEST_CASE("chromatic number and alpha against brute force") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng());
    const auto c = chromatic_number(g);
    CHECK(c.chromatic_number == oracle::chromatic_number(g));
    CHECK(is_proper_coloring(g, c.coloring));
    const VertexSet within = rng() & g.vertices();
    CHECK(independence_number(g, within) == oracle::independence_number(g, within));
  }
}

TEST_CASE("alpha inequality") {
  for (int v = 0; v < 9; ++v) CHECK(alpha_inequality_check(complete_graph(9), v, 9));
  const Graph k = complete_multipartite({2, 2, 2, 2, 2});
  for (int v = 0; v < 10; ++v) {
    CHECK(independence_number(k, k.neighbors(v)) == 2);
    CHECK_FALSE(alpha_inequality_check(k, v, 9));
    CHECK(alpha_inequality_check(k, v, 8));
  }
  CHECK_THROWS_AS(alpha_inequality_check(k, 10, 9), GraphError);
}

TEST_CASE("split graphs") {
  CHECK(is_split_graph(complete_graph(5)));
  CHECK_FALSE(is_split_graph(cycle_graph(4)));
  CHECK_FALSE(is_split_graph(cycle_graph(5)));
  CHECK_FALSE(is_split_graph(disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK(is_split_graph(star_graph(5)));
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng());
    const bool truth = split_by_partition(g);
    CHECK(is_split_graph(g) == truth);
    CHECK(is_split_by_degrees(g) == truth);
  }
}

TEST_CASE("density premise and conclusion") {
  CHECK(density_premise(complete_graph(5), 5));
  const auto k5 = density_conclusion(complete_graph(5), 5);
  CHECK(k5.premise);
  CHECK(k5.conclusion);
  CHECK(k5.consistent());
  CHECK(k5.triangles == 10);
  const auto k22222 = density_conclusion(complete_multipartite({2, 2, 2, 2, 2}), 8);
  CHECK(k22222.triangles == 80);
  CHECK(k22222.slack == -40);
  CHECK_FALSE(k22222.premise);
  CHECK(k22222.conclusion);  // K_{2,2,2,2,2} is a minor of itself
  CHECK_THROWS_AS(density_premise(Graph(4), 5), GraphError);
  CHECK_THROWS_AS(density_premise(complete_graph(4), 3), GraphError);
  CHECK_THROWS_AS(density_premise(complete_graph(4), 9), GraphError);
}

TEST_CASE("k-tree triangle counts and the (k-2)-tree deficit") {
  for (int k = 2; k <= 6; ++k) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Graph g = k_tree(k, k + static_cast<int>(s % 12), s);
      CHECK(triangle_count(g) == ktree_triangles(k, g.edge_count()));
      CHECK(triangle_count(g) == oracle::triangle_count(g));
    }
  }
  // a (k-2)-tree misses 2t >= m(k-3) by exactly C(k-1,3)
  for (int k = 5; k <= 8; ++k) {
    const Graph g = k_tree(k - 2, 10, 1234);
    CHECK(2 * triangle_count(g) - static_cast<long long>(g.edge_count()) * (k - 3) == -binomial(k - 1, 3));
    CHECK_FALSE(density_premise(g, k));
  }
}

TEST_CASE("density conclusion follows the premise on small random graphs") {
  std::mt19937_64 rng(23);
  int premises = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 4 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % 3);
    const Graph g = random_graph(n, 0.7, rng());
    if (g.edge_count() == 0) continue;
    const auto v = density_conclusion(g, k);
    if (!v.premise) continue;
    ++premises;
    CHECK(v.conclusion);
    CHECK(oracle::has_clique_minor_by_reduction(g, k));
  }
  CHECK(premises > 30);
}

TEST_CASE("sampling") {
  CHECK(sample_seed(1, 0) == sample_seed(1, 0));
  CHECK(sample_seed(1, 0) != sample_seed(1, 1));
  CHECK(sample_seed(1, 0) != sample_seed(2, 0));
  CHECK(random_planar_triangulation(3, 1) == complete_graph(3));
  for (std::uint64_t i = 0; i < 40; ++i) {
    const int n = 4 + static_cast<int>(i % 10);
    const Graph g = random_planar_triangulation(n, sample_seed(5, i));
    CHECK(g.edge_count() == 3 * n - 6);
    CHECK(g.min_degree() >= 3);
    for (const Edge& e : g.edges()) CHECK(triangles_on_edge(g, e.u, e.v) >= 2);
    CHECK(is_kr_minor_free(g, 5));
  }
  CHECK(random_planar_triangulation(12, 8) == random_planar_triangulation(12, 8));
  CHECK(minor_free_edge_budget(10, 8) == 40);
  CHECK(minor_free_edge_budget(10, 7) == 35);
  CHECK(minor_free_edge_budget(4, 7) == 6);
  for (std::uint64_t i = 0; i < 60; ++i) {
    const int r = 5 + static_cast<int>(i % 3);
    const int n = r + static_cast<int>(i % 3);
    const auto g = random_minor_free_graph(n, r, sample_seed(6, i));
    REQUIRE(g.has_value());
    CHECK(g->edge_count() <= minor_free_edge_budget(n, r));
    CHECK_FALSE(oracle::has_clique_minor_by_reduction(*g, r));
  }
}
