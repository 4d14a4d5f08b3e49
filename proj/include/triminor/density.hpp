#pragma once

#include <optional>

#include "triminor/graph.hpp"
#include "triminor/witness.hpp"

namespace triminor {

struct DensityVerdict {
  int k = 0;
  long long edges = 0;
  long long triangles = 0;
  /// 2t - m(k-3); the premise holds when this is >= 0.
  long long slack = 0;
  bool premise = false;
  bool conclusion = false;
  /// K_k, or K_{2,2,2,2,2} when k = 8 and there is no K_8.
  std::optional<MinorWitness> witness;
  /// The implication premise => conclusion.
  bool consistent() const { return !premise || conclusion; }
};

/// t >= m(k-3)/2, compared as 2t >= m(k-3). Needs at least one edge and k in 4..8.
bool density_premise(const Graph& g, int k);
/// Premise and conclusion side by side; the minor search is exhaustive, so n <= 16.
DensityVerdict density_conclusion(const Graph& g, int k);

/// Triangles in any k-tree with m edges: ((k-1)m - C(k+1,3)) / 2.
long long ktree_triangles(int k, long long m);

}  // namespace triminor
