#pragma once

#include <vector>

#include "triminor/graph.hpp"

namespace triminor {

struct ChromaticResult {
  int chromatic_number = 0;
  /// coloring[v] in 0..chromatic_number-1.
  std::vector<int> coloring;
};

/// Exact DSATUR branch and bound; n <= 20.
ChromaticResult chromatic_number(const Graph& g);
bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring);

/// Size of a largest independent set inside `within`.
int independence_number(const Graph& g, VertexSet within);
int independence_number(const Graph& g);

/// deg(v) + 2 - alpha(N(v)) >= k.
bool alpha_inequality_check(const Graph& g, int v, int k);

/// Clique plus independent set, decided by scanning for induced C4, C5 or 2K2.
bool is_split_graph(const Graph& g);
/// The same question through the degree sequence (Hammer and Simeone).
bool is_split_by_degrees(const Graph& g);

}  // namespace triminor
