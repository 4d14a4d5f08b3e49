#include "triminor/density.hpp"

#include "triminor/minors.hpp"
#include "triminor/named.hpp"

namespace triminor {

namespace {

void check_args(const Graph& g, int k) {
  if (k < 4 || k > 8) throw GraphError("density: k must be in 4..8");
  if (g.edge_count() == 0) throw GraphError("density: graph has no edges");
}

}  // namespace

bool density_premise(const Graph& g, int k) {
  check_args(g, k);
  return 2 * triangle_count(g) >= static_cast<long long>(g.edge_count()) * (k - 3);
}

DensityVerdict density_conclusion(const Graph& g, int k) {
  check_args(g, k);
  DensityVerdict out;
  out.k = k;
  out.edges = g.edge_count();
  out.triangles = triangle_count(g);
  out.slack = 2 * out.triangles - out.edges * (k - 3);
  out.premise = out.slack >= 0;
  out.witness = has_clique_minor(g, k);
  if (!out.witness && k == 8) out.witness = has_minor(g, complete_multipartite({2, 2, 2, 2, 2}));
  out.conclusion = out.witness.has_value();
  return out;
}

long long ktree_triangles(int k, long long m) { return ((k - 1) * m - binomial(k + 1, 3)) / 2; }

}  // namespace triminor
