#include "triminor/minors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <functional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "triminor/canon.hpp"
#include "triminor/named.hpp"

namespace triminor {

namespace {

constexpr int kCap = kExhaustiveHostLimit;

/// Contracted host: vertex i stands for the original vertices in bs[i].
struct Work {
  int n = 0;
  std::array<VertexSet, kCap> adj{};
  std::array<VertexSet, kCap> bs{};

  int edges() const {
    int twice = 0;
    for (int i = 0; i < n; ++i) twice += popcount(adj[static_cast<std::size_t>(i)]);
    return twice / 2;
  }
  int deg(int v) const { return popcount(adj[static_cast<std::size_t>(v)]); }
  VertexSet row(int v) const { return adj[static_cast<std::size_t>(v)]; }
};

Work from_graph(const Graph& g) {
  Work w;
  w.n = g.order();
  for (int v = 0; v < w.n; ++v) {
    w.adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    w.bs[static_cast<std::size_t>(v)] = bit(v);
  }
  return w;
}

VertexSet squeeze(VertexSet s, int b) { return (s & low_bits(b)) | ((s >> (b + 1)) << b); }

void remove_vertex(Work& w, VertexSet& marked, int b) {
  for (int i = 0; i < w.n; ++i) w.adj[static_cast<std::size_t>(i)] = squeeze(w.adj[static_cast<std::size_t>(i)], b);
  for (int i = b; i + 1 < w.n; ++i) {
    w.adj[static_cast<std::size_t>(i)] = w.adj[static_cast<std::size_t>(i + 1)];
    w.bs[static_cast<std::size_t>(i)] = w.bs[static_cast<std::size_t>(i + 1)];
  }
  --w.n;
  w.adj[static_cast<std::size_t>(w.n)] = 0;
  w.bs[static_cast<std::size_t>(w.n)] = 0;
  marked = squeeze(marked, b);
}

// Merged vertex sits at min(u, v) and keeps the mark if either end had it.
void contract(Work& w, VertexSet& marked, int u, int v) {
  const int a = std::min(u, v);
  const int b = std::max(u, v);
  const auto A = static_cast<std::size_t>(a);
  const auto B = static_cast<std::size_t>(b);
  for (VertexSet s = w.adj[B] & ~bit(a); s != 0; s &= s - 1) w.adj[static_cast<std::size_t>(lowest(s))] |= bit(a);
  w.adj[A] = (w.adj[A] | w.adj[B]) & ~bit(a) & ~bit(b);
  w.bs[A] |= w.bs[B];
  if (contains(marked, b)) marked |= bit(a);
  remove_vertex(w, marked, b);
}

Work extract(const Work& w, VertexSet keep, VertexSet& marked) {
  Work out;
  std::array<int, kCap> pos{};
  VertexSet new_marked = 0;
  for (int v = 0; v < w.n; ++v) {
    if (!contains(keep, v)) continue;
    pos[static_cast<std::size_t>(v)] = out.n;
    if (contains(marked, v)) new_marked |= bit(out.n);
    out.bs[static_cast<std::size_t>(out.n)] = w.bs[static_cast<std::size_t>(v)];
    ++out.n;
  }
  for (int v = 0; v < w.n; ++v) {
    if (!contains(keep, v)) continue;
    VertexSet row = 0;
    for (VertexSet s = w.row(v) & keep; s != 0; s &= s - 1) row |= bit(pos[static_cast<std::size_t>(lowest(s))]);
    out.adj[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = row;
  }
  marked = new_marked;
  return out;
}

std::vector<VertexSet> work_components(const Work& w) {
  std::vector<VertexSet> out;
  VertexSet left = low_bits(w.n);
  while (left != 0) {
    VertexSet comp = left & (~left + 1);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s != 0; s &= s - 1) next |= w.row(lowest(s));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool neighborhood_is_clique(const Work& w, int v) {
  const VertexSet nb = w.row(v);
  for (VertexSet s = nb; s != 0; s &= s - 1) {
    const int x = lowest(s);
    if ((nb & ~bit(x) & ~w.row(x)) != 0) return false;
  }
  return true;
}

bool find_clique(const Work& w, VertexSet cand, int need, VertexSet chosen, VertexSet& out) {
  if (need == 0) {
    out = chosen;
    return true;
  }
  while (popcount(cand) >= need) {
    const int v = lowest(cand);
    cand &= cand - 1;
    if (find_clique(w, cand & w.row(v), need - 1, chosen | bit(v), out)) return true;
  }
  return false;
}

struct StateKey {
  std::array<std::uint16_t, kCap + 2> words{};
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : k.words) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

StateKey make_key(const Work& w, VertexSet marked) {
  StateKey k;
  k.words[0] = static_cast<std::uint16_t>(w.n);
  k.words[1] = static_cast<std::uint16_t>(marked);
  for (int i = 0; i < w.n; ++i) k.words[static_cast<std::size_t>(i + 2)] = static_cast<std::uint16_t>(w.row(i));
  return k;
}

constexpr std::size_t kLocalMemoLimit = std::size_t{1} << 21;

// Common shape of both searches: a state is a contracted host plus a set of "pinned" vertices
// that are promised to end up as singleton branch sets. Every unpinned vertex v is either
// unused, shares a branch set with a neighbour, or is a singleton; the three branches are
// "contract into an unpinned neighbour", "delete" (only needed when every neighbour is pinned,
// since an unused vertex can always be absorbed by a neighbour instead) and "pin".

class CliqueSearch {
 public:
  explicit CliqueSearch(int r) : r_(r) {}

  std::optional<std::vector<VertexSet>> run(const Work& w) {
    if (solve(w, 0)) return found_;
    return std::nullopt;
  }

 private:
  enum class Step { open, found, dead };

  Step reduce(Work& w, VertexSet& pinned) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < w.n && !changed; ++v) {
        if (contains(pinned, v)) continue;
        const int d = w.deg(v);
        if (d <= 1) {
          remove_vertex(w, pinned, v);
          changed = true;
        } else if (neighborhood_is_clique(w, v)) {
          if (d >= r_ - 1) {
            VertexSet clique = 0;
            find_clique(w, w.row(v), r_ - 1, bit(v), clique);
            record(w, clique);
            return Step::found;
          }
          remove_vertex(w, pinned, v);
          changed = true;
        } else if (r_ >= 4 && d == 2) {
          const int a = lowest(w.row(v));
          const int b = lowest(w.row(v) & ~bit(a));
          if (!contains(pinned, a)) {
            contract(w, pinned, v, a);
          } else if (!contains(pinned, b)) {
            contract(w, pinned, v, b);
          } else {
            remove_vertex(w, pinned, v);
          }
          changed = true;
        }
      }
    }
    for (VertexSet s = pinned; s != 0; s &= s - 1) {
      if (w.deg(lowest(s)) < r_ - 1) return Step::dead;
    }
    return Step::open;
  }

  void record(const Work& w, VertexSet clique) {
    std::vector<VertexSet> sets;
    for (VertexSet s = clique; s != 0; s &= s - 1) sets.push_back(w.bs[static_cast<std::size_t>(lowest(s))]);
    found_ = std::move(sets);
  }

  bool solve(Work w, VertexSet pinned) {
    const Step step = reduce(w, pinned);
    if (step == Step::found) return true;
    if (step == Step::dead || w.n < r_) return false;
    // Every contraction or deletion on the way to K_r removes at least one edge.
    if (w.edges() - (w.n - r_) < binomial(r_, 2)) return false;

    const auto comps = work_components(w);
    if (comps.size() > 1) {
      for (VertexSet c : comps) {
        if (popcount(c) < r_) continue;
        VertexSet sub_pinned = pinned;
        Work sub = extract(w, c, sub_pinned);
        if (solve(sub, sub_pinned)) return true;
      }
      return false;
    }

    const StateKey key = make_key(w, pinned);
    if (failed_.contains(key)) return false;

    VertexSet rich = 0;
    for (int v = 0; v < w.n; ++v) {
      if (w.deg(v) >= r_ - 1) rich |= bit(v);
    }
    VertexSet clique = 0;
    if (find_clique(w, rich, r_, 0, clique)) {
      record(w, clique);
      return true;
    }
    if (w.n == r_) return remember(key);

    int v = -1;
    for (int x = 0; x < w.n; ++x) {
      if (!contains(pinned, x) && (v < 0 || w.deg(x) < w.deg(v))) v = x;
    }
    const VertexSet open_nbrs = w.row(v) & ~pinned;

    std::array<std::pair<int, int>, kCap> order{};
    int count = 0;
    for (VertexSet s = open_nbrs; s != 0; s &= s - 1) {
      const int u = lowest(s);
      order[static_cast<std::size_t>(count++)] = {popcount(w.row(u) & w.row(v)), u};
    }
    std::sort(order.begin(), order.begin() + count);
    for (int i = 0; i < count; ++i) {
      Work child = w;
      VertexSet child_pinned = pinned;
      contract(child, child_pinned, v, order[static_cast<std::size_t>(i)].second);
      if (solve(child, child_pinned)) return true;
    }
    if (open_nbrs == 0) {
      Work child = w;
      VertexSet child_pinned = pinned;
      remove_vertex(child, child_pinned, v);
      if (solve(child, child_pinned)) return true;
    }
    if (w.deg(v) >= r_ - 1 && popcount(pinned) < r_ && (w.row(v) & pinned) == pinned) {
      if (solve(w, pinned | bit(v))) return true;
    }
    return remember(key);
  }

  bool remember(const StateKey& key) {
    if (failed_.size() < kLocalMemoLimit) failed_.insert(key);
    return false;
  }

  int r_;
  std::unordered_set<StateKey, StateKeyHash> failed_;
  std::vector<VertexSet> found_;
};

/// Subgraph embedding of a pattern into a contracted host.
class Embedder {
 public:
  explicit Embedder(const Graph& h) : h_(h), k_(h.order()) {
    // Order pattern vertices so each one has as many earlier neighbours as possible.
    VertexSet placed = 0;
    for (int step = 0; step < k_; ++step) {
      int best = -1;
      int best_key = -1;
      for (int x = 0; x < k_; ++x) {
        if (contains(placed, x)) continue;
        const int key = popcount(h.neighbors(x) & placed) * 64 + h.degree(x);
        if (key > best_key) {
          best = x;
          best_key = key;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  bool embed(const Work& w, std::vector<int>& image) {
    image.assign(static_cast<std::size_t>(k_), -1);
    return extend(w, 0, 0, image);
  }

 private:
  bool extend(const Work& w, int idx, VertexSet used, std::vector<int>& image) {
    if (idx == k_) return true;
    const int x = order_[static_cast<std::size_t>(idx)];
    VertexSet cand = low_bits(w.n) & ~used;
    for (VertexSet s = h_.neighbors(x); s != 0; s &= s - 1) {
      const int y = image[static_cast<std::size_t>(lowest(s))];
      if (y >= 0) cand &= w.row(y);
    }
    const int need = h_.degree(x);
    for (; cand != 0; cand &= cand - 1) {
      const int v = lowest(cand);
      if (w.deg(v) < need) continue;
      image[static_cast<std::size_t>(x)] = v;
      if (extend(w, idx + 1, used | bit(v), image)) return true;
    }
    image[static_cast<std::size_t>(x)] = -1;
    return false;
  }

  const Graph& h_;
  int k_;
  std::vector<int> order_;
};

class PatternSearch {
 public:
  explicit PatternSearch(const Graph& h)
      : h_(h), k_(h.order()), hm_(h.edge_count()), dmin_(h.min_degree()), embedder_(h) {
    for (int v = 0; v < k_; ++v) degrees_.push_back(h.degree(v));
    std::sort(degrees_.rbegin(), degrees_.rend());
  }

  std::optional<std::vector<VertexSet>> run(const Work& w) {
    if (solve(w, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool degree_dominates(const Work& w) const {
    std::array<int, kCap> d{};
    for (int v = 0; v < w.n; ++v) d[static_cast<std::size_t>(v)] = w.deg(v);
    std::sort(d.begin(), d.begin() + w.n, std::greater<>());
    for (int i = 0; i < k_; ++i) {
      if (d[static_cast<std::size_t>(i)] < degrees_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  bool solve(Work w, VertexSet pinned) {
    // Low-degree vertices that cannot be singletons are leaves of their branch set or unused.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < w.n && !changed; ++v) {
        if (contains(pinned, v)) continue;
        const int d = w.deg(v);
        if ((d == 0 && dmin_ >= 1) || (d == 1 && dmin_ >= 2)) {
          remove_vertex(w, pinned, v);
          changed = true;
        }
      }
    }
    if (w.n < k_ || w.edges() < hm_) return false;

    const StateKey key = make_key(w, pinned);
    if (failed_.contains(key)) return false;

    if (degree_dominates(w)) {
      std::vector<int> image;
      if (embedder_.embed(w, image)) {
        found_.clear();
        for (int x = 0; x < k_; ++x) found_.push_back(w.bs[static_cast<std::size_t>(image[static_cast<std::size_t>(x)])]);
        return true;
      }
    }
    if (w.n == k_) return remember(key);

    int v = -1;
    for (int x = 0; x < w.n; ++x) {
      if (!contains(pinned, x) && (v < 0 || w.deg(x) < w.deg(v))) v = x;
    }
    for (VertexSet s = w.row(v) & ~pinned; s != 0; s &= s - 1) {
      Work child = w;
      VertexSet child_pinned = pinned;
      contract(child, child_pinned, v, lowest(s));
      if (solve(child, child_pinned)) return true;
    }
    {
      Work child = w;
      VertexSet child_pinned = pinned;
      remove_vertex(child, child_pinned, v);
      if (solve(child, child_pinned)) return true;
    }
    if (w.deg(v) >= dmin_ && popcount(pinned) < k_) {
      if (solve(w, pinned | bit(v))) return true;
    }
    return remember(key);
  }

  bool remember(const StateKey& key) {
    if (failed_.size() < kLocalMemoLimit) failed_.insert(key);
    return false;
  }

  const Graph& h_;
  int k_;
  int hm_;
  int dmin_;
  std::vector<int> degrees_;
  Embedder embedder_;
  std::unordered_set<StateKey, StateKeyHash> failed_;
  std::vector<VertexSet> found_;
};

void require_host_size(const Graph& g) {
  if (g.order() > kExhaustiveHostLimit) {
    throw MinorSearchError("exhaustive minor search is limited to " + std::to_string(kExhaustiveHostLimit) +
                           " host vertices, got " + std::to_string(g.order()));
  }
}

/// Verdicts keyed by canonical certificate and r; positive entries keep the witness in
/// canonical positions.
class MinorCache {
 public:
  using Entry = std::optional<std::vector<VertexSet>>;

  std::optional<Entry> find(const std::string& key) {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return it->second;
  }

  void insert(std::string key, Entry value) {
    std::unique_lock lock(mu_);
    if (map_.size() >= kLimit) map_.clear();
    map_.try_emplace(std::move(key), std::move(value));
  }

  MinorCacheStats stats() {
    std::shared_lock lock(mu_);
    return {map_.size(), hits_.load(), misses_.load()};
  }

  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
    hits_ = 0;
    misses_ = 0;
  }

 private:
  static constexpr std::size_t kLimit = std::size_t{1} << 20;
  std::shared_mutex mu_;
  std::unordered_map<std::string, Entry> map_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

MinorCache& cache() {
  static MinorCache instance;
  return instance;
}

std::optional<std::vector<VertexSet>> clique_search(const Graph& g, int r) {
  return CliqueSearch(r).run(from_graph(g));
}

}  // namespace

std::optional<MinorWitness> has_clique_minor(const Graph& g, int r) {
  if (r < 1) throw MinorSearchError("clique minor order must be positive");
  require_host_size(g);
  const Graph pattern = complete_graph(std::max(r, 1));
  if (g.order() < r) return std::nullopt;
  if (r == 1) return MinorWitness{{bit(0)}, pattern};
  if (r == 2) {
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) > 0) return MinorWitness{{bit(v), bit(lowest(g.neighbors(v)))}, pattern};
    }
    return std::nullopt;
  }

  const CanonicalForm form = canonical_form(g);
  std::string key = form.cert.bytes;
  key.push_back(static_cast<char>(r));

  const auto& lab = form.labeling;
  auto to_canonical = [&](VertexSet s) {
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < g.order(); ++i) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    VertexSet out = 0;
    for (VertexSet t = s; t != 0; t &= t - 1) out |= bit(pos[static_cast<std::size_t>(lowest(t))]);
    return out;
  };
  auto from_canonical = [&](VertexSet s) {
    VertexSet out = 0;
    for (VertexSet t = s; t != 0; t &= t - 1) out |= bit(lab[static_cast<std::size_t>(lowest(t))]);
    return out;
  };

  if (auto hit = cache().find(key)) {
    if (!hit->has_value()) return std::nullopt;
    MinorWitness w{{}, pattern};
    for (VertexSet s : **hit) w.branch_sets.push_back(from_canonical(s));
    return w;
  }

  auto sets = clique_search(g, r);
  if (!sets) {
    cache().insert(std::move(key), std::nullopt);
    return std::nullopt;
  }
  std::vector<VertexSet> canonical_sets;
  for (VertexSet s : *sets) canonical_sets.push_back(to_canonical(s));
  cache().insert(std::move(key), std::move(canonical_sets));
  return MinorWitness{std::move(*sets), pattern};
}

bool is_kr_minor_free(const Graph& g, int r) { return !has_clique_minor(g, r).has_value(); }

int hadwiger_number(const Graph& g) {
  int r = 1;
  while (r < g.order() && has_clique_minor(g, r + 1)) ++r;
  return r;
}

MinorCacheStats minor_cache_stats() { return cache().stats(); }
void clear_minor_cache() { cache().clear(); }

std::optional<MinorWitness> has_minor(const Graph& g, const Graph& h) {
  require_host_size(g);
  if (h.order() > g.order() || h.edge_count() > g.edge_count()) return std::nullopt;
  if (h.edge_count() == binomial(h.order(), 2)) return has_clique_minor(g, h.order());
  auto sets = PatternSearch(h).run(from_graph(g));
  if (!sets) return std::nullopt;
  return MinorWitness{std::move(*sets), h};
}

RootedK3Outcome rooted_k3(const Graph& g, int a, int b, int c) {
  const int n = g.order();
  for (int x : {a, b, c}) {
    if (x < 0 || x >= n) throw GraphError("rooted_k3: terminal out of range");
  }
  if (a == b || b == c || a == c) throw GraphError("rooted_k3: terminals must be distinct");
  require_host_size(g);

  const VertexSet terminals = bit(a) | bit(b) | bit(c);
  for (int v = 0; v < n; ++v) {
    bool separates = true;
    for (VertexSet comp : components(g, g.vertices() & ~bit(v))) {
      if (popcount(comp & terminals) >= 2) {
        separates = false;
        break;
      }
    }
    if (separates) return RootedK3Outcome{v};
  }

  const Graph pattern = complete_graph(3);
  std::optional<MinorWitness> found;

  // Connected sets containing `root` inside `allowed`, each produced once.
  std::function<bool(VertexSet, VertexSet, VertexSet, VertexSet, const std::function<bool(VertexSet)>&)> grow =
      [&](VertexSet x, VertexSet ext, VertexSet banned, VertexSet allowed, const std::function<bool(VertexSet)>& visit) {
        if (visit(x)) return true;
        while (ext != 0) {
          const int v = lowest(ext);
          ext &= ext - 1;
          const VertexSet x2 = x | bit(v);
          const VertexSet ext2 = (ext | (g.neighbors(v) & allowed)) & ~x2 & ~banned;
          if (grow(x2, ext2, banned, allowed, visit)) return true;
          banned |= bit(v);
        }
        return false;
      };

  auto touch = [&](VertexSet s) {
    VertexSet t = 0;
    for (VertexSet u = s; u != 0; u &= u - 1) t |= g.neighbors(lowest(u));
    return t;
  };

  const VertexSet all = g.vertices();
  const VertexSet allowed_a = all & ~bit(b) & ~bit(c);
  grow(bit(a), g.neighbors(a) & allowed_a, 0, allowed_a, [&](VertexSet ba) {
    const VertexSet around_a = touch(ba);
    const VertexSet allowed_b = all & ~ba & ~bit(c);
    return grow(bit(b), g.neighbors(b) & allowed_b, 0, allowed_b, [&](VertexSet bb) {
      if ((around_a & bb) == 0) return false;
      for (VertexSet comp : components(g, all & ~ba & ~bb)) {
        if (!contains(comp, c)) continue;
        const VertexSet around_c = touch(comp);
        if ((around_c & ba) != 0 && (around_c & bb) != 0) {
          found = MinorWitness{{ba, bb, comp}, pattern};
          return true;
        }
      }
      return false;
    });
  });
  if (!found) throw std::logic_error("rooted_k3: neither a rooted K3 model nor a separating vertex");
  return RootedK3Outcome{std::move(*found)};
}

ApexAugmentReport apex_augment_check(const Graph& g, int k_max, int r, std::optional<VertexSet> candidates) {
  if (g.order() + 1 > kExhaustiveHostLimit) throw MinorSearchError("apex augmentation host exceeds the exhaustive limit");
  const VertexSet pool = candidates.value_or(g.vertices()) & g.vertices();
  k_max = std::min(k_max, popcount(pool));
  ApexAugmentReport report;
  report.r = r;
  report.k_max = k_max;
  report.survivors.resize(static_cast<std::size_t>(std::max(k_max, 0) + 1));
  const std::vector<int> cand = members(pool);
  const auto total = std::uint64_t{1} << cand.size();
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    const int k = std::popcount(pick);
    if (k > k_max) continue;
    VertexSet s = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if ((pick >> i) & 1U) s |= bit(cand[i]);
    }
    ++report.tested;
    if (is_kr_minor_free(add_vertex(g, s), r)) report.survivors[static_cast<std::size_t>(k)].push_back(s);
  }
  for (auto& bucket : report.survivors) std::sort(bucket.begin(), bucket.end());
  return report;
}

DoubleApexResult double_apex_check(const Graph& h, int r) {
  if (h.order() + 2 > kExhaustiveHostLimit) throw MinorSearchError("double apex host exceeds the exhaustive limit");
  if (r < 2) throw MinorSearchError("double apex check needs r >= 2");
  DoubleApexResult result;
  const int n = h.order();
  const int size = r - 1;
  if (n <= size) return result;
  const Graph with_x = add_vertex(h, h.vertices());
  for (VertexSet y = low_bits(size); y < bit(n);) {
    ++result.subsets_tested;
    if (is_kr_minor_free(add_vertex(with_x, y), r)) {
      result.holds = false;
      result.failing_subset = y;
      return result;
    }
    // next subset of the same size (Gosper)
    const VertexSet low = y & (~y + 1);
    const VertexSet ripple = y + low;
    y = (((ripple ^ y) >> 2) / low) | ripple;
  }
  return result;
}

}  // namespace triminor
