#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "triminor/graph.hpp"

namespace triminor {

/// 2^61 - 1.
inline constexpr std::uint64_t kStressPrime = (std::uint64_t{1} << 61) - 1;

enum class StressKind { stress_free, stressed };

struct StressVerdict {
  StressKind verdict = StressKind::stress_free;
  /// Smallest left-kernel dimension seen over the sampled embeddings.
  int dimension = 0;
  int trials = 0;  ///< embeddings actually sampled
  std::uint64_t prime = kStressPrime;
  /// Chance that a "stressed" verdict is wrong, (m/p)^trials; 0 for stress-free.
  double error_bound = 0.0;
  bool stress_free() const { return verdict == StressKind::stress_free; }
};

/// Rank of the m x dn equilibrium matrix at random points of F_p^d. The row of edge uv holds
/// p(u)-p(v) in u's block and p(v)-p(u) in v's block; stresses are its left kernel.
/// Stops at the first full-rank embedding.
StressVerdict stress_space_dim(const Graph& g, int d, std::uint64_t seed, int trials = 3);

/// Rank of the stress matrix for the given coordinates, coords[v*d + i] in [0, p).
int stress_matrix_rank(const Graph& g, int d, const std::vector<std::uint64_t>& coords);

struct WhiteleyStep {
  Edge edge;  ///< in the labels of the graph being contracted
  int common_neighbors = 0;
};

struct WhiteleyResult {
  Graph graph;
  std::vector<WhiteleyStep> log;
};

/// Contracts the lexicographically first edge with at most d-1 common neighbours until
/// none is left.
WhiteleyResult whiteley_reduce(const Graph& g, int d);

}  // namespace triminor
