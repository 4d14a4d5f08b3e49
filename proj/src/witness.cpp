#include "triminor/witness.hpp"

namespace triminor {

namespace {

// Plain flood fill over the host rows.
bool flood_connected(const Graph& host, VertexSet s) {
  if (s == 0) return false;
  VertexSet reached = s & (~s + 1);
  VertexSet frontier = reached;
  while (frontier != 0) {
    VertexSet next = 0;
    for (int v = 0; v < host.order(); ++v) {
      if (contains(frontier, v)) next |= host.neighbors(v) & s;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == s;
}

}  // namespace

WitnessCheck validate_minor_witness(const Graph& host, const MinorWitness& w) {
  const int k = w.pattern.order();
  if (static_cast<int>(w.branch_sets.size()) != k) {
    return {false, "branch set count differs from pattern order"};
  }
  VertexSet used = 0;
  for (int i = 0; i < k; ++i) {
    const VertexSet b = w.branch_sets[static_cast<std::size_t>(i)];
    if ((b & ~host.vertices()) != 0) return {false, "branch set " + std::to_string(i) + " leaves the host"};
    if ((b & used) != 0) return {false, "branch set " + std::to_string(i) + " overlaps an earlier one"};
    if (!flood_connected(host, b)) return {false, "branch set " + std::to_string(i) + " is empty or disconnected"};
    used |= b;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!w.pattern.adjacent(i, j)) continue;
      VertexSet touch = 0;
      for (int v : members(w.branch_sets[static_cast<std::size_t>(i)])) touch |= host.neighbors(v);
      if ((touch & w.branch_sets[static_cast<std::size_t>(j)]) == 0) {
        return {false, "no host edge between branch sets " + std::to_string(i) + " and " + std::to_string(j)};
      }
    }
  }
  return {true, {}};
}

std::string format_witness(const MinorWitness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.branch_sets.size(); ++i) {
    if (i > 0) out += '|';
    out += describe(w.branch_sets[i]);
  }
  return out;
}

}  // namespace triminor
