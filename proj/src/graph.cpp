#include "triminor/graph.hpp"

#include <algorithm>
#include <string>

namespace triminor {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet to_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= bit(v);
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside 1..64");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    g.adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    g.adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  int total = 0;
  for (int v = 0; v < n; ++v) total += g.degree(v);
  g.m_ = total / 2;
  return g;
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  Graph g(n);
  const VertexSet mask = low_bits(n);
  int total = 0;
  for (int v = 0; v < n; ++v) {
    g.adj_[static_cast<std::size_t>(v)] = rows[static_cast<std::size_t>(v)] & mask & ~bit(v);
    total += g.degree(v);
  }
  g.m_ = total / 2;
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (VertexSet s = neighbors(u) & ~low_bits(u + 1); s != 0; s &= s - 1) {
      out.push_back({u, lowest(s)});
    }
  }
  return out;
}

int Graph::edges_within(VertexSet s) const {
  int total = 0;
  for (VertexSet t = s; t != 0; t &= t - 1) total += popcount(neighbors(lowest(t)) & s);
  return total / 2;
}

bool Graph::is_clique(VertexSet s) const {
  for (VertexSet t = s; t != 0; t &= t - 1) {
    const int v = lowest(t);
    if ((s & ~(neighbors(v) | bit(v))) != 0) return false;
  }
  return true;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  Graph g = *this;
  if (!adjacent(u, v)) {
    g.adj_[static_cast<std::size_t>(u)] |= bit(v);
    g.adj_[static_cast<std::size_t>(v)] |= bit(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  if (adjacent(u, v)) {
    g.adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    g.adj_[static_cast<std::size_t>(v)] &= ~bit(u);
    --g.m_;
  }
  return g;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph make_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int triangles_on_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  return popcount(g.neighbors(u) & g.neighbors(v));
}

long long triangle_count(const Graph& g) {
  long long per_edge_sum = 0;
  for (const auto& e : g.edges()) per_edge_sum += popcount(g.neighbors(e.u) & g.neighbors(e.v));
  return per_edge_sum / 3;
}

EdgeTriangleReport min_triangle_edge(const Graph& g, std::optional<int> degree_cap) {
  if (g.edge_count() == 0) throw GraphError("graph has no edges");
  EdgeTriangleReport report;
  report.degree_cap = degree_cap;
  bool found = false;
  for (const auto& e : g.edges()) {
    if (degree_cap && g.degree(e.u) > *degree_cap && g.degree(e.v) > *degree_cap) continue;
    const int t = popcount(g.neighbors(e.u) & g.neighbors(e.v));
    report.per_edge.push_back({e, t});
    if (!found || t < report.min_count) {
      report.min_count = t;
      report.witness = e;
      found = true;
    }
  }
  if (!found) {
    throw GraphError("no edge has an endpoint of degree <= " + std::to_string(*degree_cap));
  }
  return report;
}

Contraction contract_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  const int keep = std::min(u, v);
  const int drop = std::max(u, v);
  const int n = g.order();
  Contraction out;
  out.relabel.resize(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) out.relabel[static_cast<std::size_t>(w)] = w < drop ? w : w - 1;
  out.relabel[static_cast<std::size_t>(drop)] = keep;

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const int a = out.relabel[static_cast<std::size_t>(e.u)];
    const int b = out.relabel[static_cast<std::size_t>(e.v)];
    if (a != b) edges.push_back({a, b});
  }
  out.graph = Graph::from_edges(n - 1, edges);
  return out;
}

Graph induced(const Graph& g, VertexSet s) {
  s &= g.vertices();
  if (s == 0) throw GraphError("induced subgraph of an empty vertex set");
  const auto verts = members(s);
  std::array<VertexSet, kMaxVertices> rows{};
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const VertexSet nb = g.neighbors(verts[i]) & s;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (contains(nb, verts[j])) rows[i] |= bit(static_cast<int>(j));
    }
  }
  return Graph::from_rows(static_cast<int>(verts.size()), rows);
}

Graph complement(const Graph& g) {
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = ~g.neighbors(v);
  return Graph::from_rows(g.order(), rows);
}

Graph add_vertex(const Graph& g, VertexSet attach) {
  const int n = g.order();
  if (n + 1 > kMaxVertices) throw GraphError("cannot exceed 64 vertices");
  attach &= g.vertices();
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = g.neighbors(v) | (contains(attach, v) ? bit(n) : 0);
  }
  rows[static_cast<std::size_t>(n)] = attach;
  return Graph::from_rows(n + 1, rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n + h.order() > kMaxVertices) throw GraphError("cannot exceed 64 vertices");
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v);
  for (int v = 0; v < h.order(); ++v) rows[static_cast<std::size_t>(n + v)] = h.neighbors(v) << n;
  return Graph::from_rows(n + h.order(), rows);
}

bool is_connected(const Graph& g, VertexSet within) {
  if (within == 0) return true;
  VertexSet reached = bit(lowest(within));
  VertexSet frontier = reached;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(lowest(s));
    next &= within & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left != 0) {
    VertexSet reached = bit(lowest(left));
    VertexSet frontier = reached;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(lowest(s));
      next &= left & ~reached;
      reached |= next;
      frontier = next;
    }
    out.push_back(reached);
    left &= ~reached;
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const int> p) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back({p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)]});
  }
  return Graph::from_edges(g.order(), edges);
}

long long mader_edge_bound(int n, int r) {
  return static_cast<long long>(r - 2) * n - binomial(r - 1, 2);
}

bool mader_bound_check(const Graph& g, int r) {
  if (r < 3 || r > 7) throw GraphError("Mader bound applies to 3 <= r <= 7");
  // K_{r-1} sits exactly on the bound, so n = r - 1 is still a meaningful query.
  if (g.order() < r - 1) throw GraphError("Mader bound needs n >= r - 1");
  return g.edge_count() <= mader_edge_bound(g.order(), r);
}

std::string describe(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : members(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace triminor
