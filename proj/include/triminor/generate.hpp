#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "triminor/graph.hpp"

namespace triminor {

class GenError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hereditary predicate applied while the search tree grows.
struct Prune {
  enum class Kind { none, minor_free, edge_cap };
  Kind kind = Kind::none;
  int r = 0;  ///< K_r for minor_free

  static Prune none() { return {}; }
  static Prune minor_free(int r) { return {Kind::minor_free, r}; }
  static Prune edge_cap() { return {Kind::edge_cap, 0}; }
};

/// "none", "K4".."K8", or "edge-cap" (which takes its bound from GenSpec::max_edges).
Prune parse_prune(std::string_view text);
std::string to_string(const Prune& p);

/// Which search tree to walk. The complement view grows the complement under a maximum
/// degree bound and is preferred when min_degree is above half the order.
enum class GenStrategy { automatic, direct, complement };

struct GenSpec {
  int n = 0;
  int min_degree = 0;
  Prune prune;
  std::optional<int> max_edges;
  GenStrategy strategy = GenStrategy::automatic;
};

struct GenStats {
  std::uint64_t nodes = 0;      ///< accepted search-tree nodes
  std::uint64_t emitted = 0;
  std::uint64_t minor_tests = 0;
  bool complement_view = false;
  bool infeasible = false;      ///< rejected up front by the edge-count bound
};

using GraphSink = std::function<void(const Graph&)>;

/// One graph per isomorphism class of graphs on spec.n vertices that meet the spec, in a
/// fixed order that does not depend on `workers`.
GenStats generate(const GenSpec& spec, const GraphSink& sink, int workers = 1);
std::vector<Graph> generate(const GenSpec& spec, int workers = 1);
std::uint64_t generate_count(const GenSpec& spec, int workers = 1);

/// Validates a spec and reports which view `automatic` would pick.
bool uses_complement_view(const GenSpec& spec);

}  // namespace triminor
