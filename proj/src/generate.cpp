#include "triminor/generate.hpp"

#include <atomic>
#include <charconv>
#include <thread>
#include <unordered_set>
#include <variant>

#include "triminor/canon.hpp"
#include "triminor/minors.hpp"

namespace triminor {

Prune parse_prune(std::string_view text) {
  if (text == "none") return Prune::none();
  if (text == "edge-cap") return Prune::edge_cap();
  if (text.size() == 2 && (text[0] == 'K' || text[0] == 'k') && text[1] >= '4' && text[1] <= '8') {
    return Prune::minor_free(text[1] - '0');
  }
  throw GenError("unknown prune predicate '" + std::string(text) + "' (expected none, K4..K8 or edge-cap)");
}

std::string to_string(const Prune& p) {
  switch (p.kind) {
    case Prune::Kind::none: return "none";
    case Prune::Kind::edge_cap: return "edge-cap";
    case Prune::Kind::minor_free: return "K" + std::to_string(p.r);
  }
  return "none";
}

namespace {

void validate(const GenSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxVertices) throw GenError("vertex count must be in 1..64");
  if (spec.min_degree < 0) throw GenError("min_degree must be non-negative");
  if (spec.min_degree >= spec.n && !(spec.n == 1 && spec.min_degree == 0)) {
    throw GenError("infeasible spec: min_degree " + std::to_string(spec.min_degree) + " >= n " + std::to_string(spec.n));
  }
  if (spec.max_edges && *spec.max_edges < 0) throw GenError("max_edges must be non-negative");
  switch (spec.prune.kind) {
    case Prune::Kind::none: break;
    case Prune::Kind::edge_cap:
      if (!spec.max_edges) throw GenError("edge-cap pruning needs max_edges");
      break;
    case Prune::Kind::minor_free:
      if (spec.prune.r < 3 || spec.prune.r > 8) throw GenError("minor pruning supports K3..K8");
      if (spec.n > kExhaustiveHostLimit) throw GenError("minor-pruned generation is limited to 16 vertices");
      break;
  }
}

bool pick_complement(const GenSpec& spec) {
  switch (spec.strategy) {
    case GenStrategy::direct: return false;
    case GenStrategy::complement: return true;
    case GenStrategy::automatic: break;
  }
  return spec.n - 1 - spec.min_degree < spec.min_degree;
}

struct Node {
  Graph graph;
  CanonicalCert cert;
  int depth = 0;
};

class Generator {
 public:
  explicit Generator(const GenSpec& spec)
      : spec_(spec), complement_(pick_complement(spec)), degree_cap_(spec.n - 1 - spec.min_degree) {
    if (spec_.prune.kind == Prune::Kind::minor_free && spec_.prune.r <= 7 && spec_.n >= spec_.prune.r - 1) {
      mader_ = mader_edge_bound(spec_.n, spec_.prune.r);
    }
  }

  bool complement_view() const { return complement_; }

  bool infeasible() const {
    const long long needed = (static_cast<long long>(spec_.min_degree) * spec_.n + 1) / 2;
    if (mader_ && needed > *mader_) return true;
    if (spec_.max_edges && needed > *spec_.max_edges) return true;
    return false;
  }

  Node root() const {
    Graph g(spec_.n);
    return Node{g, canonical_cert(g), 0};
  }

  /// The graph a tree node stands for, if it meets the spec.
  std::optional<Graph> output(const Node& node) {
    const Graph g = complement_ ? complement(node.graph) : node.graph;
    if (g.min_degree() < spec_.min_degree) return std::nullopt;
    if (spec_.max_edges && g.edge_count() > *spec_.max_edges) return std::nullopt;
    if (complement_ && spec_.prune.kind == Prune::Kind::minor_free) {
      if (mader_ && g.edge_count() > *mader_) return std::nullopt;
      ++stats_minor_tests;
      if (!is_kr_minor_free(g, spec_.prune.r)) return std::nullopt;
    }
    return g;
  }

  std::vector<Node> children(const Node& node) {
    const Graph& g = node.graph;
    const int n = g.order();
    std::vector<Node> out;
    std::unordered_set<CanonicalCert, CertHash> seen;
    for (int u = 0; u < n; ++u) {
      if (complement_ && g.degree(u) >= degree_cap_) continue;
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        if (complement_ && g.degree(v) >= degree_cap_) continue;
        Graph child = g.with_edge(u, v);
        if (!complement_) {
          if (spec_.max_edges && child.edge_count() > *spec_.max_edges) continue;
          if (mader_ && child.edge_count() > *mader_) continue;
        }
        CanonicalForm form = canonical_form(child);
        if (seen.contains(form.cert)) continue;
        if (!is_canonical_parent(child, form, u, v, node.cert)) continue;
        if (!complement_ && spec_.prune.kind == Prune::Kind::minor_free) {
          ++stats_minor_tests;
          if (!is_kr_minor_free(child, spec_.prune.r)) continue;
        }
        seen.insert(form.cert);
        out.push_back(Node{std::move(child), std::move(form.cert), node.depth + 1});
      }
    }
    return out;
  }

  std::atomic<std::uint64_t> stats_minor_tests{0};

 private:
  // The canonical deletion edge joins the two canonical positions (i, j), i < j, that are
  // largest in lexicographic order among the edges.
  static bool is_canonical_parent(const Graph& child, const CanonicalForm& form, int u, int v,
                                  const CanonicalCert& parent) {
    const auto& lab = form.labeling;
    const int n = child.order();
    for (int i = n - 1; i >= 0; --i) {
      for (int j = n - 1; j > i; --j) {
        const int a = lab[static_cast<std::size_t>(i)];
        const int b = lab[static_cast<std::size_t>(j)];
        if (!child.adjacent(a, b)) continue;
        if ((a == u && b == v) || (a == v && b == u)) return true;
        return canonical_cert(child.without_edge(a, b)) == parent;
      }
    }
    return false;
  }

  GenSpec spec_;
  bool complement_;
  int degree_cap_;
  std::optional<long long> mader_;
};

void walk(Generator& gen, const Node& node, std::atomic<std::uint64_t>& nodes, const GraphSink& sink) {
  ++nodes;
  if (auto g = gen.output(node)) sink(*g);
  for (const Node& child : gen.children(node)) walk(gen, child, nodes, sink);
}

}  // namespace

bool uses_complement_view(const GenSpec& spec) {
  validate(spec);
  return pick_complement(spec);
}

GenStats generate(const GenSpec& spec, const GraphSink& sink, int workers) {
  validate(spec);
  Generator gen(spec);
  GenStats stats;
  stats.complement_view = gen.complement_view();
  if (gen.infeasible()) {
    stats.infeasible = true;
    return stats;
  }
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t emitted = 0;
  auto counting_sink = [&](const Graph& g) {
    ++emitted;
    sink(g);
  };

  if (workers <= 1) {
    walk(gen, gen.root(), nodes, counting_sink);
  } else {
    // Expand the top of the tree in DFS order, keeping each pending subtree as a placeholder,
    // until there is enough independent work; then fill the placeholders concurrently.
    using Item = std::variant<Graph, Node>;
    std::vector<Item> items;
    items.emplace_back(gen.root());
    const std::size_t target = static_cast<std::size_t>(workers) * 32;
    for (int round = 0; round < 6; ++round) {
      std::size_t pending = 0;
      for (const auto& it : items) pending += it.index() == 1 ? 1 : 0;
      if (pending == 0 || pending >= target) break;
      std::vector<Item> next;
      for (auto& it : items) {
        if (it.index() == 0) {
          next.push_back(std::move(it));
          continue;
        }
        const Node& node = std::get<1>(it);
        ++nodes;
        if (auto g = gen.output(node)) next.emplace_back(std::move(*g));
        for (Node& child : gen.children(node)) next.emplace_back(std::move(child));
      }
      items = std::move(next);
    }
    std::vector<std::size_t> tasks;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].index() == 1) tasks.push_back(i);
    }
    std::vector<std::vector<Graph>> results(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t t = cursor++; t < tasks.size(); t = cursor++) {
        walk(gen, std::get<1>(items[tasks[t]]), nodes, [&](const Graph& g) { results[t].push_back(g); });
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::size_t t = 0;
    for (auto& it : items) {
      if (it.index() == 0) {
        counting_sink(std::get<0>(it));
      } else {
        for (const Graph& g : results[t]) counting_sink(g);
        ++t;
      }
    }
  }
  stats.nodes = nodes.load();
  stats.emitted = emitted;
  stats.minor_tests = gen.stats_minor_tests.load();
  return stats;
}

std::vector<Graph> generate(const GenSpec& spec, int workers) {
  std::vector<Graph> out;
  generate(spec, [&](const Graph& g) { out.push_back(g); }, workers);
  return out;
}

std::uint64_t generate_count(const GenSpec& spec, int workers) {
  return generate(spec, [](const Graph&) {}, workers).emitted;
}

}  // namespace triminor
