#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "triminor/graph.hpp"
#include "triminor/witness.hpp"

namespace triminor {

/// Largest host the exhaustive searches accept.
inline constexpr int kExhaustiveHostLimit = 16;

class MinorSearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact test for `h` as a minor of `g`; the witness is in g's labels.
std::optional<MinorWitness> has_minor(const Graph& g, const Graph& h);

/// Exact K_r-minor test. Results are memoized by canonical certificate in a shared,
/// bounded cache, so repeated queries on isomorphic hosts are cheap.
std::optional<MinorWitness> has_clique_minor(const Graph& g, int r);
bool is_kr_minor_free(const Graph& g, int r);
/// Largest r with a K_r minor.
int hadwiger_number(const Graph& g);

struct MinorCacheStats {
  std::size_t entries = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
};
MinorCacheStats minor_cache_stats();
void clear_minor_cache();

/// Either a model of K3 whose branch sets contain a, b, c in that order, or a vertex v
/// such that no component of g - v holds two of a, b, c.
struct RootedK3Outcome {
  std::variant<MinorWitness, int> result;
  bool has_minor() const { return result.index() == 0; }
  const MinorWitness& witness() const { return std::get<0>(result); }
  int separator() const { return std::get<1>(result); }
};
RootedK3Outcome rooted_k3(const Graph& g, int a, int b, int c);

/// Vertex-disjoint s1-t1 and s2-t2 paths, each listed from its first terminal.
using PathPair = std::pair<std::vector<int>, std::vector<int>>;
std::optional<PathPair> two_disjoint_paths(const Graph& g, int s1, int t1, int s2, int t2);

struct ApexAugmentReport {
  int r = 0;
  int k_max = 0;
  /// survivors[k]: the k-subsets S for which g plus a vertex joined to S stays K_r-minor-free.
  std::vector<std::vector<VertexSet>> survivors;
  std::size_t tested = 0;
};

/// Attaches a new vertex to every subset of `candidates` (default: all vertices) of size at
/// most k_max and records the subsets that do not create a K_r minor.
ApexAugmentReport apex_augment_check(const Graph& g, int k_max, int r,
                                     std::optional<VertexSet> candidates = std::nullopt);

struct DoubleApexResult {
  bool holds = true;
  std::optional<VertexSet> failing_subset;
  std::size_t subsets_tested = 0;
  explicit operator bool() const { return holds; }
};

/// For every Y strictly inside V(h) with |Y| = r - 1: h plus x joined to V(h) and y joined
/// to Y must contain a K_r minor.
DoubleApexResult double_apex_check(const Graph& h, int r = 8);

/// Minimum vertex cut size; n - 1 for complete graphs and 0 for disconnected ones.
int vertex_connectivity(const Graph& g);

}  // namespace triminor
