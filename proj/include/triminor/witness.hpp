#pragma once

#include <string>
#include <vector>

#include "triminor/graph.hpp"

namespace triminor {

/// Branch-set model of `pattern` in some host: branch_sets[i] realizes pattern vertex i.
struct MinorWitness {
  std::vector<VertexSet> branch_sets;
  Graph pattern;
};

struct WitnessCheck {
  bool ok = false;
  std::string reason;  ///< empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks disjointness, connectivity of every branch set and a host edge for every pattern edge.
WitnessCheck validate_minor_witness(const Graph& host, const MinorWitness& w);

/// "{0,5}|{1}|{2,3}" in pattern-vertex order.
std::string format_witness(const MinorWitness& w);

}  // namespace triminor
