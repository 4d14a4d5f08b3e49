#include <array>
#include <unordered_set>

#include "triminor/minors.hpp"

namespace triminor {

namespace {

bool reachable(const Graph& g, int s, int t, VertexSet within) {
  if (!contains(within, s) || !contains(within, t)) return false;
  VertexSet seen = bit(s);
  VertexSet frontier = seen;
  while (frontier != 0) {
    if (contains(seen, t)) return true;
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(lowest(f)) & within;
    frontier = next & ~seen;
    seen |= next;
  }
  return contains(seen, t);
}

std::vector<int> bfs_path(const Graph& g, int s, int t, VertexSet within) {
  std::array<int, kMaxVertices> parent{};
  parent.fill(-1);
  std::vector<int> queue{s};
  VertexSet seen = bit(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    if (x == t) break;
    for (VertexSet nb = g.neighbors(x) & within & ~seen; nb != 0; nb &= nb - 1) {
      const int y = lowest(nb);
      seen |= bit(y);
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  std::vector<int> path;
  for (int x = t; x != -1; x = parent[static_cast<std::size_t>(x)]) path.insert(path.begin(), x);
  return path;
}

class LinkageSearch {
 public:
  LinkageSearch(const Graph& g, int t1, int s2, int t2) : g_(g), t1_(t1), s2_(s2), t2_(t2) {}

  // Extends an s1-t1 path ending at `at` that uses `used`; succeeds once s2 and t2 stay
  // connected outside the finished path.
  bool extend(int at, VertexSet used) {
    if (at == t1_) {
      if (reachable(g_, s2_, t2_, g_.vertices() & ~used)) {
        path_used_ = used;
        return true;
      }
      return false;
    }
    const std::uint64_t key = (used << 6) | static_cast<std::uint64_t>(at);
    if (dead_.contains(key)) return false;
    for (VertexSet nb = g_.neighbors(at) & ~used & ~bit(s2_) & ~bit(t2_); nb != 0; nb &= nb - 1) {
      const int y = lowest(nb);
      trail_.push_back(y);
      if (extend(y, used | bit(y))) return true;
      trail_.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  std::vector<int> trail_;
  VertexSet path_used_ = 0;

 private:
  const Graph& g_;
  int t1_, s2_, t2_;
  std::unordered_set<std::uint64_t> dead_;
};

/// Unit vertex capacities: vertex v splits into v_in = 2v and v_out = 2v + 1.
int local_connectivity(const Graph& g, int s, int t, int stop_at) {
  const int n = g.order();
  const int nodes = 2 * n;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  for (int v = 0; v < n; ++v) {
    cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = (v == s || v == t) ? n : 1;
    for (VertexSet nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
      cap[static_cast<std::size_t>(2 * v + 1)][static_cast<std::size_t>(2 * lowest(nb))] = 1;
    }
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  while (flow < stop_at) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(sink)] < 0; ++head) {
      const int x = queue[head];
      for (int y = 0; y < nodes; ++y) {
        if (parent[static_cast<std::size_t>(y)] < 0 && cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int y = sink; y != source; y = parent[static_cast<std::size_t>(y)]) {
      const int x = parent[static_cast<std::size_t>(y)];
      --cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      ++cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

std::optional<PathPair> two_disjoint_paths(const Graph& g, int s1, int t1, int s2, int t2) {
  const int n = g.order();
  for (int x : {s1, t1, s2, t2}) {
    if (x < 0 || x >= n) throw GraphError("two_disjoint_paths: terminal out of range");
  }
  if (popcount(bit(s1) | bit(t1) | bit(s2) | bit(t2)) != 4) {
    throw GraphError("two_disjoint_paths: terminals must be distinct");
  }
  if (n > kExhaustiveHostLimit) throw MinorSearchError("two_disjoint_paths is exhaustive and limited to 16 vertices");

  LinkageSearch search(g, t1, s2, t2);
  search.trail_.push_back(s1);
  if (!search.extend(s1, bit(s1))) return std::nullopt;
  std::vector<int> second = bfs_path(g, s2, t2, g.vertices() & ~search.path_used_);
  return PathPair{search.trail_, std::move(second)};
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t, best));
    }
  }
  return best;
}

}  // namespace triminor
