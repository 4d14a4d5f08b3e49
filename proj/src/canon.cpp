#include "triminor/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace triminor {

namespace {

using Trace = std::vector<std::uint32_t>;
using RowKeys = std::array<std::uint64_t, kMaxVertices>;

constexpr std::size_t kMaxGenerators = 128;

/// Ordered partition of the vertex set; cells are contiguous runs of `lab`.
struct Partition {
  std::array<std::uint8_t, kMaxVertices> lab{};   // position -> vertex
  std::array<std::uint8_t, kMaxVertices> len{};   // cell start -> cell length
  std::array<std::uint8_t, kMaxVertices> cell{};  // vertex -> cell start
  int cells = 0;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) { add_twin_generators(); }

  CanonicalForm run() {
    Partition root;
    for (int i = 0; i < n_; ++i) {
      root.lab[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
      root.cell[static_cast<std::size_t>(i)] = 0;
    }
    root.len[0] = static_cast<std::uint8_t>(n_);
    root.cells = 1;
    path_traces_.clear();
    path_traces_.push_back(refine(root, 0));
    search(root, 0);

    CanonicalForm out;
    out.labeling.assign(best_lab_.begin(), best_lab_.begin() + n_);
    out.cert = make_cert(best_rows_);
    out.automorphisms = std::move(gens_);
    return out;
  }

 private:
  void add_twin_generators() {
    // u, w are twins when N(u) \ {w} == N(w) \ {u}; swapping them is an automorphism.
    std::vector<int> cls(static_cast<std::size_t>(n_), -1);
    for (int u = 0; u < n_; ++u) {
      if (cls[static_cast<std::size_t>(u)] >= 0) continue;
      cls[static_cast<std::size_t>(u)] = u;
      int prev = u;
      for (int w = u + 1; w < n_; ++w) {
        if (cls[static_cast<std::size_t>(w)] >= 0) continue;
        if ((g_.neighbors(u) & ~bit(w)) != (g_.neighbors(w) & ~bit(u))) continue;
        cls[static_cast<std::size_t>(w)] = u;
        if (gens_.size() < kMaxGenerators) {
          std::vector<int> perm(static_cast<std::size_t>(n_));
          std::iota(perm.begin(), perm.end(), 0);
          std::swap(perm[static_cast<std::size_t>(prev)], perm[static_cast<std::size_t>(w)]);
          gens_.push_back(std::move(perm));
        }
        prev = w;
      }
    }
  }

  VertexSet cell_mask(const Partition& p, int start) const {
    VertexSet m = 0;
    for (int i = start; i < start + p.len[static_cast<std::size_t>(start)]; ++i) {
      m |= bit(p.lab[static_cast<std::size_t>(i)]);
    }
    return m;
  }

  /// Refines to the coarsest equitable partition finer than `p`, starting from splitter
  /// cell `first`. Returns the label-invariant trace of the splits performed.
  Trace refine(Partition& p, int first) const {
    Trace trace;
    std::array<std::uint8_t, kMaxVertices> queue{};
    std::array<bool, kMaxVertices> queued{};
    std::size_t head = 0;
    std::size_t tail = 0;
    auto push = [&](int s) {
      if (!queued[static_cast<std::size_t>(s)]) {
        queued[static_cast<std::size_t>(s)] = true;
        queue[tail++ % kMaxVertices] = static_cast<std::uint8_t>(s);
      }
    };
    push(first);

    std::array<std::pair<int, int>, kMaxVertices> scratch{};
    while (head != tail) {
      const int w = queue[head++ % kMaxVertices];
      queued[static_cast<std::size_t>(w)] = false;
      const VertexSet wmask = cell_mask(p, w);
      for (int x = 0; x < n_;) {
        const int L = p.len[static_cast<std::size_t>(x)];
        if (L == 1) {
          ++x;
          continue;
        }
        bool uniform = true;
        for (int i = 0; i < L; ++i) {
          const int v = p.lab[static_cast<std::size_t>(x + i)];
          scratch[static_cast<std::size_t>(i)] = {popcount(g_.neighbors(v) & wmask), v};
          if (scratch[static_cast<std::size_t>(i)].first != scratch[0].first) uniform = false;
        }
        if (uniform) {
          x += L;
          continue;
        }
        std::sort(scratch.begin(), scratch.begin() + L);
        trace.push_back(static_cast<std::uint32_t>(x));
        trace.push_back(static_cast<std::uint32_t>(L));
        int fragments = 0;
        for (int i = 0; i < L;) {
          int j = i;
          while (j < L && scratch[static_cast<std::size_t>(j)].first ==
                              scratch[static_cast<std::size_t>(i)].first) {
            ++j;
          }
          const int s = x + i;
          p.len[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(j - i);
          for (int k = i; k < j; ++k) {
            const int v = scratch[static_cast<std::size_t>(k)].second;
            p.lab[static_cast<std::size_t>(x + k)] = static_cast<std::uint8_t>(v);
            p.cell[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(s);
          }
          trace.push_back(static_cast<std::uint32_t>(scratch[static_cast<std::size_t>(i)].first));
          trace.push_back(static_cast<std::uint32_t>(j - i));
          ++fragments;
          i = j;
        }
        p.cells += fragments - 1;
        for (int i = 0; i < L; i += p.len[static_cast<std::size_t>(x + i)]) push(x + i);
        x += L;
      }
    }
    trace.push_back(0xFFFFFFFFU);
    trace.push_back(static_cast<std::uint32_t>(p.cells));
    return trace;
  }

  static void individualize(Partition& p, int v) {
    const int x = p.cell[static_cast<std::size_t>(v)];
    const int L = p.len[static_cast<std::size_t>(x)];
    int pos = x;
    while (p.lab[static_cast<std::size_t>(pos)] != v) ++pos;
    std::swap(p.lab[static_cast<std::size_t>(pos)], p.lab[static_cast<std::size_t>(x)]);
    p.len[static_cast<std::size_t>(x)] = 1;
    p.len[static_cast<std::size_t>(x + 1)] = static_cast<std::uint8_t>(L - 1);
    for (int i = x + 1; i < x + L; ++i) {
      p.cell[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = static_cast<std::uint8_t>(x + 1);
    }
    ++p.cells;
  }

  static int compare_paths(const std::vector<Trace>& a, const std::vector<Trace>& b, std::size_t depth) {
    for (std::size_t d = 0; d < depth; ++d) {
      if (a[d] < b[d]) return -1;
      if (b[d] < a[d]) return 1;
    }
    return 0;
  }

  RowKeys leaf_rows(const Partition& p) const {
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[static_cast<std::size_t>(i)]] = i;
    RowKeys rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t key = 0;
      for (VertexSet s = g_.neighbors(p.lab[static_cast<std::size_t>(i)]); s != 0; s &= s - 1) {
        key |= std::uint64_t{1} << (63 - pos[static_cast<std::size_t>(lowest(s))]);
      }
      rows[static_cast<std::size_t>(i)] = key;
    }
    return rows;
  }

  int compare_rows(const RowKeys& a, const RowKeys& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
        return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? -1 : 1;
      }
    }
    return 0;
  }

  void record_automorphism(const std::array<std::uint8_t, kMaxVertices>& from,
                           const std::array<std::uint8_t, kMaxVertices>& to) {
    if (gens_.size() >= kMaxGenerators) return;
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) perm[from[static_cast<std::size_t>(i)]] = to[static_cast<std::size_t>(i)];
    gens_.push_back(std::move(perm));
  }

  void visit_leaf(const Partition& p) {
    const RowKeys rows = leaf_rows(p);
    const std::size_t depth = path_traces_.size();
    if (!have_leaf_) {
      have_leaf_ = true;
      first_traces_ = best_traces_ = path_traces_;
      first_rows_ = best_rows_ = rows;
      first_lab_ = best_lab_ = p.lab;
      return;
    }
    if (first_traces_.size() == depth && compare_paths(path_traces_, first_traces_, depth) == 0 &&
        compare_rows(rows, first_rows_) == 0) {
      record_automorphism(first_lab_, p.lab);
      return;
    }
    int c = best_traces_.size() == depth ? compare_paths(path_traces_, best_traces_, depth) : 0;
    if (best_traces_.size() != depth) c = path_traces_ < best_traces_ ? -1 : 1;
    if (c == 0) c = compare_rows(rows, best_rows_);
    if (c < 0) {
      best_traces_ = path_traces_;
      best_rows_ = rows;
      best_lab_ = p.lab;
    } else if (c == 0) {
      record_automorphism(best_lab_, p.lab);
    }
  }

  /// Orbits of the subgroup generated by recorded automorphisms that fix `fixed` pointwise.
  std::vector<int> orbits() const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (int v : fixed_) {
        if (gen[static_cast<std::size_t>(v)] != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int i = 0; i < n_; ++i) {
        const int a = find(i);
        const int b = find(gen[static_cast<std::size_t>(i)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = find(i);
    return parent;
  }

  void search(const Partition& p, std::size_t depth) {
    if (p.cells == n_) {
      visit_leaf(p);
      return;
    }
    int target = 0;
    while (p.len[static_cast<std::size_t>(target)] == 1) ++target;
    const int L = p.len[static_cast<std::size_t>(target)];
    std::vector<int> cell_vertices;
    for (int i = target; i < target + L; ++i) cell_vertices.push_back(p.lab[static_cast<std::size_t>(i)]);

    std::vector<int> tried;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::vector<int> orbit;
    for (int v : cell_vertices) {
      if (!tried.empty()) {
        if (gens_seen != gens_.size()) {
          orbit = orbits();
          gens_seen = gens_.size();
        }
        bool equivalent = false;
        for (int t : tried) {
          if (orbit[static_cast<std::size_t>(t)] == orbit[static_cast<std::size_t>(v)]) {
            equivalent = true;
            break;
          }
        }
        if (equivalent) continue;
      }
      tried.push_back(v);

      Partition child = p;
      individualize(child, v);
      Trace t = refine(child, child.cell[static_cast<std::size_t>(v)]);

      if (have_leaf_) {
        const bool matches_first =
            first_traces_.size() > depth + 1 &&
            compare_paths(path_traces_, first_traces_, depth + 1) == 0 && t == first_traces_[depth + 1];
        int c = compare_paths(path_traces_, best_traces_, std::min(depth + 1, best_traces_.size()));
        if (c == 0) {
          if (best_traces_.size() > depth + 1) {
            c = t < best_traces_[depth + 1] ? -1 : (best_traces_[depth + 1] < t ? 1 : 0);
          } else {
            c = 1;
          }
        }
        if (c > 0 && !matches_first) continue;
      }

      path_traces_.push_back(std::move(t));
      fixed_.push_back(v);
      search(child, depth + 1);
      fixed_.pop_back();
      path_traces_.pop_back();
    }
  }

  CanonicalCert make_cert(const RowKeys& rows) const {
    CanonicalCert cert;
    cert.bytes.push_back(static_cast<char>(n_));
    unsigned char acc = 0;
    int filled = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        acc = static_cast<unsigned char>((acc << 1) | ((rows[static_cast<std::size_t>(i)] >> (63 - j)) & 1U));
        if (++filled == 8) {
          cert.bytes.push_back(static_cast<char>(acc));
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) cert.bytes.push_back(static_cast<char>(acc << (8 - filled)));
    return cert;
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> gens_;
  std::vector<int> fixed_;
  std::vector<Trace> path_traces_;

  bool have_leaf_ = false;
  std::vector<Trace> first_traces_;
  std::vector<Trace> best_traces_;
  RowKeys first_rows_{};
  RowKeys best_rows_{};
  std::array<std::uint8_t, kMaxVertices> first_lab_{};
  std::array<std::uint8_t, kMaxVertices> best_lab_{};
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return CanonicalForm{CanonicalCert{std::string(1, '\0')}, {}, {}};
  return Search(g).run();
}

CanonicalCert canonical_cert(const Graph& g) { return canonical_form(g).cert; }

Graph canonical_graph(const Graph& g) {
  const auto form = canonical_form(g);
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) p[static_cast<std::size_t>(form.labeling[static_cast<std::size_t>(i)])] = i;
  return relabel(g, p);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_cert(g) == canonical_cert(h);
}

}  // namespace triminor
