#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

bool connected(const Graph& g, VertexSet s) {
  if (s == 0) return false;
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v) {
    if ((s >> v) & 1U) vs.push_back(v);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<int> stack{vs.front()};
  seen[static_cast<std::size_t>(vs.front())] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : vs) {
      if (!seen[static_cast<std::size_t>(y)] && g.adjacent(x, y)) {
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == static_cast<int>(vs.size());
}

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  const int n = g.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(i, j) != h.adjacent(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

int triangles_on_edge(const Graph& g, int u, int v) {
  int count = 0;
  for (int w = 0; w < g.order(); ++w) {
    if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) ++count;
  }
  return count;
}

long long triangle_count(const Graph& g) {
  long long t = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++t;
  return t;
}

bool has_minor(const Graph& host, const Graph& pattern) {
  const int n = host.order();
  const int k = pattern.order();
  if (k > n) return false;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);  // 0 = unused, i+1 = branch set i
  while (true) {
    std::vector<VertexSet> sets(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) {
      if (assign[static_cast<std::size_t>(v)] > 0) {
        sets[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)] - 1)] |= VertexSet{1} << v;
      }
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = connected(host, sets[static_cast<std::size_t>(i)]);
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k && ok; ++j) {
        if (!pattern.adjacent(i, j)) continue;
        bool linked = false;
        for (int a = 0; a < n && !linked; ++a) {
          if (!((sets[static_cast<std::size_t>(i)] >> a) & 1U)) continue;
          for (int b = 0; b < n; ++b) {
            if (((sets[static_cast<std::size_t>(j)] >> b) & 1U) && host.adjacent(a, b)) {
              linked = true;
              break;
            }
          }
        }
        ok = linked;
      }
    }
    if (ok) return true;
    int pos = 0;
    while (pos < n && assign[static_cast<std::size_t>(pos)] == k) assign[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) return false;
    ++assign[static_cast<std::size_t>(pos)];
  }
}

namespace {

using Rows = std::vector<VertexSet>;

Rows drop_vertex(const Rows& rows, int x) {
  Rows out;
  for (int v = 0; v < static_cast<int>(rows.size()); ++v) {
    if (v == x) continue;
    VertexSet r = rows[static_cast<std::size_t>(v)];
    const VertexSet low = r & ((VertexSet{1} << x) - 1);
    out.push_back(low | ((r >> (x + 1)) << x));
  }
  return out;
}

bool reduce_to_clique(const Rows& rows, int r, std::set<Rows>& dead) {
  const int n = static_cast<int>(rows.size());
  if (n < r) return false;
  if (n == r) {
    for (int v = 0; v < n; ++v) {
      if (__builtin_popcountll(rows[static_cast<std::size_t>(v)]) != n - 1) return false;
    }
    return true;
  }
  if (dead.contains(rows)) return false;
  for (int x = 0; x < n; ++x) {
    if (reduce_to_clique(drop_vertex(rows, x), r, dead)) return true;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!((rows[static_cast<std::size_t>(u)] >> v) & 1U)) continue;
      // merge v into u, then delete v
      Rows merged = rows;
      const VertexSet nb = (merged[static_cast<std::size_t>(u)] | merged[static_cast<std::size_t>(v)]) &
                           ~(VertexSet{1} << u) & ~(VertexSet{1} << v);
      merged[static_cast<std::size_t>(u)] = nb;
      for (int w = 0; w < n; ++w) {
        if ((nb >> w) & 1U) merged[static_cast<std::size_t>(w)] |= VertexSet{1} << u;
      }
      if (reduce_to_clique(drop_vertex(merged, v), r, dead)) return true;
    }
  }
  dead.insert(rows);
  return false;
}

}  // namespace

bool has_clique_minor_by_reduction(const Graph& host, int r) {
  Rows rows;
  for (int v = 0; v < host.order(); ++v) rows.push_back(host.neighbors(v));
  std::set<Rows> dead;
  return reduce_to_clique(rows, r, dead);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  const VertexSet all = (n == 64) ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  if (!connected(g, all)) return 0;
  int best = n - 1;
  for (VertexSet cut = 0; cut <= all; ++cut) {
    const int size = __builtin_popcountll(cut);
    if (size >= best) continue;
    const VertexSet rest = all & ~cut;
    if (__builtin_popcountll(rest) >= 2 && !connected(g, rest)) best = size;
  }
  return best;
}

namespace {

void extend(const Graph& g, int at, int t, VertexSet used, std::vector<VertexSet>& out) {
  if (at == t) {
    out.push_back(used);
    return;
  }
  for (int w = 0; w < g.order(); ++w) {
    if (g.adjacent(at, w) && !((used >> w) & 1U)) extend(g, w, t, used | (VertexSet{1} << w), out);
  }
}

}  // namespace

std::vector<VertexSet> simple_paths(const Graph& g, int s, int t) {
  std::vector<VertexSet> out;
  extend(g, s, t, VertexSet{1} << s, out);
  return out;
}

bool two_disjoint_paths(const Graph& g, int s1, int t1, int s2, int t2) {
  const auto first = simple_paths(g, s1, t1);
  const auto second = simple_paths(g, s2, t2);
  for (VertexSet a : first)
    for (VertexSet b : second)
      if ((a & b) == 0) return true;
  return false;
}

int independence_number(const Graph& g, VertexSet within) {
  int best = 0;
  for (VertexSet s = within;; s = (s - 1) & within) {
    bool independent = true;
    for (int v = 0; v < g.order() && independent; ++v) {
      if (((s >> v) & 1U) && (g.neighbors(v) & s) != 0) independent = false;
    }
    if (independent) best = std::max(best, __builtin_popcountll(s));
    if (s == 0) break;
  }
  return best;
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
      bool proper = true;
      for (int u = 0; u < n && proper; ++u)
        for (int v = u + 1; v < n; ++v)
          if (g.adjacent(u, v) && c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) {
            proper = false;
            break;
          }
      if (proper) return k;
      int pos = 0;
      while (pos < n && c[static_cast<std::size_t>(pos)] == k - 1) c[static_cast<std::size_t>(pos++)] = 0;
      if (pos == n) break;
      ++c[static_cast<std::size_t>(pos)];
    }
  }
  return n;
}

std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<triminor::Edge> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if ((mask >> b) & 1U) edges.push_back({slots[b].first, slots[b].second});
    }
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

}  // namespace oracle

namespace oracle {

std::uint32_t min_relabel_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint32_t best = ~0U;
  do {
    std::uint32_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        code = (code << 1) | (g.adjacent(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) ? 1U : 0U);
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace oracle
