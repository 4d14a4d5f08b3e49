#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace triminor {

/// Set of vertices packed into one machine word; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

/// Vertices of `s` in increasing order.
std::vector<int> members(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on at most 64 vertices with one adjacency word per vertex.
///
/// Values are immutable once built: every operation that changes the edge set
/// returns a new graph. A default-constructed Graph has no vertices and is only
/// meaningful as a placeholder.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `n` vertices, 1 <= n <= 64.
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate edges (in either orientation) collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  /// Builds a graph directly from adjacency words; the rows must already be symmetric.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }
  VertexSet vertices() const noexcept { return low_bits(n_); }

  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return contains(neighbors(u), v); }
  int degree(int v) const { return popcount(neighbors(v)); }
  int min_degree() const;
  int max_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  /// Number of edges with both ends in `s`.
  int edges_within(VertexSet s) const;
  bool is_clique(VertexSet s) const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// `make_graph` with the error contract spelled out: n in range, endpoints in range, no loops.
Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);

int triangles_on_edge(const Graph& g, int u, int v);
long long triangle_count(const Graph& g);

struct EdgeTriangles {
  Edge edge;
  int triangles = 0;
};

struct EdgeTriangleReport {
  std::vector<EdgeTriangles> per_edge;  ///< qualifying edges only
  Edge witness;
  int min_count = 0;
  std::optional<int> degree_cap;
};

/// Minimum number of triangles over edges having an endpoint of degree <= `degree_cap`
/// (all edges when no cap is given). Ties go to the lexicographically smallest edge.
EdgeTriangleReport min_triangle_edge(const Graph& g, std::optional<int> degree_cap = std::nullopt);

struct Contraction {
  Graph graph;
  /// relabel[old vertex] = index in `graph`; both endpoints of the edge map to the merged vertex.
  std::vector<int> relabel;
};

/// Contracts uv. The merged vertex takes index min(u, v); vertices above max(u, v) shift down by one.
Contraction contract_edge(const Graph& g, int u, int v);

/// Induced subgraph on `s`, vertices renumbered in increasing order.
Graph induced(const Graph& g, VertexSet s);
Graph complement(const Graph& g);
/// Adds one vertex (index n) adjacent to exactly `attach`.
Graph add_vertex(const Graph& g, VertexSet attach);
/// Disjoint union with `h` placed on indices n..n+|h|-1.
Graph disjoint_union(const Graph& g, const Graph& h);
bool is_connected(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
/// Connected components of g[within], each as a vertex set, ordered by lowest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
/// Graph with vertex p[i] of the result corresponding to vertex i of g.
Graph relabel(const Graph& g, std::span<const int> p);

constexpr long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// (r-2)n - C(r-1, 2): the largest edge count of a K_r-minor-free graph for 3 <= r <= 7.
long long mader_edge_bound(int n, int r);
bool mader_bound_check(const Graph& g, int r);

std::string describe(VertexSet s);

}  // namespace triminor
