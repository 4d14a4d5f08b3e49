#pragma once

#include <cstdint>
#include <optional>

#include "triminor/graph.hpp"

namespace triminor {

/// SplitMix64 finalizer applied to (seed, index), so sample i never depends on samples < i.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Stacked triangulation (each new vertex inside a random face) followed by random edge
/// flips. n >= 3; n = 3 gives the triangle.
Graph random_planar_triangulation(int n, std::uint64_t seed, int flips = -1);

/// Edge budget used for K_r-minor-free sampling: the extremal count for r <= 7, 6n - 20 for r = 8.
long long minor_free_edge_budget(int n, int r);

/// Rejection sampling: a uniformly random graph with m edges, m drawn from
/// [budget/2, budget], kept only if it has no K_r minor. Gives up after `attempts` draws.
std::optional<Graph> random_minor_free_graph(int n, int r, std::uint64_t seed, int attempts = 200);

/// G(n, p) with p in [0, 1].
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace triminor
