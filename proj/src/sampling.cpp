#include "triminor/sampling.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "triminor/minors.hpp"

namespace triminor {

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph random_planar_triangulation(int n, std::uint64_t seed, int flips) {
  if (n < 3 || n > kMaxVertices) throw GraphError("triangulation needs 3 <= n <= 64");
  std::mt19937_64 rng(seed);
  using Face = std::array<int, 3>;
  std::vector<Face> faces{{0, 1, 2}, {0, 2, 1}};  // both sides of the first triangle
  std::array<VertexSet, kMaxVertices> adj{};
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)] |= bit(b);
    adj[static_cast<std::size_t>(b)] |= bit(a);
  };
  link(0, 1);
  link(1, 2);
  link(0, 2);
  for (int w = 3; w < n; ++w) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    const std::size_t f = pick(rng);
    const Face t = faces[f];
    faces[f] = {t[0], t[1], w};
    faces.push_back({t[1], t[2], w});
    faces.push_back({t[2], t[0], w});
    for (int x : t) link(x, w);
  }
  if (flips < 0) flips = 4 * n;
  // An edge ab sits in two faces (a, b, c) and (b, a, d); flipping replaces it by cd.
  for (int i = 0; i < flips && n >= 4; ++i) {
    std::uniform_int_distribution<std::size_t> pick_face(0, faces.size() - 1);
    std::uniform_int_distribution<int> pick_side(0, 2);
    const std::size_t f = pick_face(rng);
    const int s = pick_side(rng);
    const int a = faces[f][static_cast<std::size_t>(s)];
    const int b = faces[f][static_cast<std::size_t>((s + 1) % 3)];
    const int c = faces[f][static_cast<std::size_t>((s + 2) % 3)];
    std::size_t g = faces.size();
    int d = -1;
    for (std::size_t j = 0; j < faces.size(); ++j) {
      for (int r = 0; r < 3; ++r) {
        if (faces[j][static_cast<std::size_t>(r)] == b && faces[j][static_cast<std::size_t>((r + 1) % 3)] == a) {
          g = j;
          d = faces[j][static_cast<std::size_t>((r + 2) % 3)];
        }
      }
    }
    if (g == faces.size() || c == d || contains(adj[static_cast<std::size_t>(c)], d)) continue;
    if (popcount(adj[static_cast<std::size_t>(a)]) <= 3 || popcount(adj[static_cast<std::size_t>(b)]) <= 3) continue;
    adj[static_cast<std::size_t>(a)] &= ~bit(b);
    adj[static_cast<std::size_t>(b)] &= ~bit(a);
    link(c, d);
    faces[f] = {a, d, c};
    faces[g] = {b, c, d};
  }
  return Graph::from_rows(n, std::span<const VertexSet>(adj.data(), static_cast<std::size_t>(n)));
}

long long minor_free_edge_budget(int n, int r) {
  if (r < 3 || r > 8) throw GraphError("minor-free sampling supports r in 3..8");
  const long long full = binomial(n, 2);
  if (n < r - 1) return full;
  const long long bound = r == 8 ? 6LL * n - 20 : mader_edge_bound(n, r);
  return std::clamp(bound, 0LL, full);
}

std::optional<Graph> random_minor_free_graph(int n, int r, std::uint64_t seed, int attempts) {
  if (n < 1 || n > kExhaustiveHostLimit) throw GraphError("minor-free sampling needs 1 <= n <= 16");
  const long long budget = minor_free_edge_budget(n, r);
  std::mt19937_64 rng(seed);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::uniform_int_distribution<long long> size(budget / 2, budget);
  for (int a = 0; a < attempts; ++a) {
    const auto m = static_cast<std::size_t>(size(rng));
    std::shuffle(all.begin(), all.end(), rng);
    Graph g = Graph::from_edges(n, std::span<const Edge>(all.data(), m));
    if (is_kr_minor_free(g, r)) return g;
  }
  return std::nullopt;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw GraphError("random_graph: p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace triminor
