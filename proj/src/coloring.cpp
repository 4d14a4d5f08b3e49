#include "triminor/coloring.hpp"

#include <algorithm>
#include <functional>

namespace triminor {

namespace {

class Dsatur {
 public:
  explicit Dsatur(const Graph& g) : g_(g), n_(g.order()), color_(static_cast<std::size_t>(n_), -1) {}

  ChromaticResult run() {
    best_ = n_ + 1;
    lower_ = greedy_clique();
    search(0, 0);
    return {best_, best_coloring_};
  }

 private:
  int greedy_clique() const {
    int best = n_ > 0 ? 1 : 0;
    for (int s = 0; s < n_; ++s) {
      VertexSet cand = g_.neighbors(s);
      int size = 1;
      while (cand != 0) {
        int pick = lowest(cand);
        for (VertexSet c = cand; c != 0; c &= c - 1) {
          if (popcount(g_.neighbors(lowest(c)) & cand) > popcount(g_.neighbors(pick) & cand)) pick = lowest(c);
        }
        ++size;
        cand &= g_.neighbors(pick);
      }
      best = std::max(best, size);
    }
    return best;
  }

  // distinct colours already on the neighbours of v
  int saturation(int v) const {
    std::uint32_t seen = 0;
    for (VertexSet nb = g_.neighbors(v); nb != 0; nb &= nb - 1) {
      const int c = color_[static_cast<std::size_t>(lowest(nb))];
      if (c >= 0) seen |= 1U << c;
    }
    return std::popcount(seen);
  }

  void search(int colored, int used) {
    if (best_ <= lower_) return;
    if (colored == n_) {
      if (used < best_) {
        best_ = used;
        best_coloring_ = color_;
      }
      return;
    }
    int v = -1, vs = -1, vd = -1;
    VertexSet uncolored = 0;
    for (int x = 0; x < n_; ++x) {
      if (color_[static_cast<std::size_t>(x)] < 0) uncolored |= bit(x);
    }
    for (VertexSet u = uncolored; u != 0; u &= u - 1) {
      const int x = lowest(u);
      const int s = saturation(x);
      const int d = popcount(g_.neighbors(x) & uncolored);
      if (s > vs || (s == vs && d > vd)) {
        v = x;
        vs = s;
        vd = d;
      }
    }
    std::uint32_t blocked = 0;
    for (VertexSet nb = g_.neighbors(v); nb != 0; nb &= nb - 1) {
      const int c = color_[static_cast<std::size_t>(lowest(nb))];
      if (c >= 0) blocked |= 1U << c;
    }
    for (int c = 0; c <= used && c < best_ - 1; ++c) {
      if (blocked & (1U << c)) continue;
      color_[static_cast<std::size_t>(v)] = c;
      search(colored + 1, std::max(used, c + 1));
      color_[static_cast<std::size_t>(v)] = -1;
      if (best_ <= lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> best_coloring_;
  int best_ = 0;
  int lower_ = 0;
};

int alpha(const Graph& g, VertexSet cand, int size, int best) {
  if (cand == 0) return std::max(size, best);
  if (size + popcount(cand) <= best) return best;
  // a vertex of degree <= 1 in cand can always be taken
  for (VertexSet c = cand; c != 0; c &= c - 1) {
    const int v = lowest(c);
    if (popcount(g.neighbors(v) & cand) <= 1) return alpha(g, cand & ~bit(v) & ~g.neighbors(v), size + 1, best);
  }
  int v = lowest(cand);
  for (VertexSet c = cand; c != 0; c &= c - 1) {
    if (popcount(g.neighbors(lowest(c)) & cand) > popcount(g.neighbors(v) & cand)) v = lowest(c);
  }
  best = alpha(g, cand & ~bit(v) & ~g.neighbors(v), size + 1, best);
  return alpha(g, cand & ~bit(v), size, best);
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g) {
  if (g.order() > 20) throw GraphError("chromatic_number: exact search is limited to 20 vertices");
  return Dsatur(g).run();
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (coloring[static_cast<std::size_t>(e.u)] == coloring[static_cast<std::size_t>(e.v)]) return false;
  }
  return std::all_of(coloring.begin(), coloring.end(), [](int c) { return c >= 0; });
}

int independence_number(const Graph& g, VertexSet within) { return alpha(g, within & g.vertices(), 0, 0); }
int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

bool alpha_inequality_check(const Graph& g, int v, int k) {
  if (v < 0 || v >= g.order()) throw GraphError("alpha_inequality_check: vertex out of range");
  return g.degree(v) + 2 - independence_number(g, g.neighbors(v)) >= k;
}

bool is_split_graph(const Graph& g) {
  const int n = g.order();
  auto degrees_all = [&](VertexSet s, int want) {
    for (VertexSet x = s; x != 0; x &= x - 1) {
      if (popcount(g.neighbors(lowest(x)) & s) != want) return false;
    }
    return true;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const VertexSet s = bit(a) | bit(b) | bit(c) | bit(d);
          if (degrees_all(s, 1) || degrees_all(s, 2)) return false;  // 2K2, C4
          for (int e = d + 1; e < n; ++e) {
            if (degrees_all(s | bit(e), 2)) return false;  // C5
          }
        }
      }
    }
  }
  return true;
}

bool is_split_by_degrees(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (deg[static_cast<std::size_t>(i)] >= i) m = i + 1;
  }
  long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
  for (int i = 0; i < m; ++i) lhs += deg[static_cast<std::size_t>(i)];
  for (int i = m; i < n; ++i) rhs += deg[static_cast<std::size_t>(i)];
  return lhs == rhs;
}

}  // namespace triminor
