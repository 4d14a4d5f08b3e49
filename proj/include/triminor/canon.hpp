#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "triminor/graph.hpp"

namespace triminor {

/// Relabeling-invariant byte string: byte 0 is n, then the row-major upper triangle of the
/// canonical adjacency matrix packed most-significant bit first.
struct CanonicalCert {
  std::string bytes;
  auto operator<=>(const CanonicalCert&) const = default;
};

struct CanonicalForm {
  CanonicalCert cert;
  /// labeling[i] is the vertex of the input placed at canonical position i.
  std::vector<int> labeling;
  /// Automorphisms met during the search (as vertex maps); not necessarily a generating set.
  std::vector<std::vector<int>> automorphisms;
};

/// Individualization-refinement search for the minimal (trace, matrix) leaf, pruned by
/// node invariants, twin transpositions and automorphisms found along the way.
CanonicalForm canonical_form(const Graph& g);
CanonicalCert canonical_cert(const Graph& g);
/// The graph relabeled into canonical position order.
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

struct CertHash {
  std::size_t operator()(const CanonicalCert& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};

}  // namespace triminor
