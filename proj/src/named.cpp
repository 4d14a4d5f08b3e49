#include "triminor/named.hpp"

#include <random>
#include <string>
#include <vector>

namespace triminor {

Graph complete_graph(int r) {
  std::vector<Edge> edges;
  for (int u = 0; u < r; ++u) {
    for (int v = u + 1; v < r; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(r, edges);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  std::vector<int> part;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw GraphError("multipartite part sizes must be positive");
    for (int i = 0; i < part_sizes[p]; ++i) part.push_back(static_cast<int>(p));
  }
  const int n = static_cast<int>(part.size());
  if (n < 1 || n > kMaxVertices) throw GraphError("multipartite graph needs 1..64 vertices");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph complete_multipartite(std::initializer_list<int> part_sizes) {
  return complete_multipartite(std::span<const int>(part_sizes.begin(), part_sizes.size()));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::from_edges(leaves + 1, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph::from_edges(10, edges);
}

Graph petersen_complement() { return complement(petersen()); }

Graph double_axle_wheel(int c) {
  if (c < 3) throw GraphError("double-axle wheel needs a cycle of length >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) {
    edges.push_back({i, (i + 1) % c});
    edges.push_back({i, c});
    edges.push_back({i, c + 1});
  }
  return Graph::from_edges(c + 2, edges);
}

Graph k_tree(int k, int n, std::uint64_t seed) {
  if (k < 1 || n < k || n > kMaxVertices) throw GraphError("k-tree needs 1 <= k <= n <= 64");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
  }
  std::vector<VertexSet> cliques{low_bits(k)};
  for (int w = k; w < n; ++w) {
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const VertexSet base = cliques[pick(rng)];
    for (int v : members(base)) {
      edges.push_back({v, w});
      cliques.push_back((base & ~bit(v)) | bit(w));
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

int param(std::span<const long long> params, std::size_t i, std::string_view name) {
  if (i >= params.size()) throw GraphError(std::string(name) + ": missing parameter");
  return static_cast<int>(params[i]);
}

}  // namespace

Graph named_graph(std::string_view name, std::span<const long long> params) {
  if (name == "complete") return complete_graph(param(params, 0, name));
  if (name == "multipartite") {
    std::vector<int> parts;
    for (long long p : params) parts.push_back(static_cast<int>(p));
    if (parts.empty()) throw GraphError("multipartite: needs part sizes");
    return complete_multipartite(parts);
  }
  if (name == "petersen") return petersen();
  if (name == "petersen_complement") return petersen_complement();
  if (name == "double_axle_wheel") return double_axle_wheel(param(params, 0, name));
  if (name == "cycle") return cycle_graph(param(params, 0, name));
  if (name == "path") return path_graph(param(params, 0, name));
  if (name == "k_tree") {
    return k_tree(param(params, 0, name), param(params, 1, name),
                  params.size() > 2 ? static_cast<std::uint64_t>(params[2]) : 0);
  }
  throw GraphError("unknown named graph '" + std::string(name) + "'");
}

}  // namespace triminor
