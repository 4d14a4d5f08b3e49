#pragma once

// Slow, obviously-correct reference implementations. Nothing here calls into the
// library beyond Graph accessors, so agreement with the fast paths is meaningful.

#include <cstdint>
#include <optional>
#include <vector>

#include "triminor/graph.hpp"

namespace oracle {

using triminor::Graph;
using triminor::VertexSet;

bool isomorphic(const Graph& g, const Graph& h);
int triangles_on_edge(const Graph& g, int u, int v);
long long triangle_count(const Graph& g);

/// Tries every map of host vertices to {unused, 0..k-1}; exponential, n <= 7 only.
bool has_minor(const Graph& host, const Graph& pattern);

/// Deletes vertices and contracts edges in every order until r vertices remain, then looks
/// for K_r. Cost grows like (n + m)^(n - r), so only for hosts a few vertices above r.
bool has_clique_minor_by_reduction(const Graph& host, int r);

/// Smallest vertex set whose removal disconnects g (n-1 for complete graphs).
int vertex_connectivity(const Graph& g);

/// All simple s-t paths as vertex masks.
std::vector<VertexSet> simple_paths(const Graph& g, int s, int t);
bool two_disjoint_paths(const Graph& g, int s1, int t1, int s2, int t2);

int independence_number(const Graph& g, VertexSet within);
int chromatic_number(const Graph& g);

/// Every labeled graph on n vertices, in bit-pattern order over the upper triangle.
std::vector<Graph> all_labeled_graphs(int n);

bool connected(const Graph& g, VertexSet s);

}  // namespace oracle

namespace oracle {

/// Lexicographically smallest upper-triangle bit string over all relabelings (n <= 8).
std::uint32_t min_relabel_code(const Graph& g);

}  // namespace oracle
