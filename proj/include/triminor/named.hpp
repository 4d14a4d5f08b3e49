#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "triminor/graph.hpp"

namespace triminor {

Graph complete_graph(int r);
/// Parts occupy consecutive index ranges in the given order.
Graph complete_multipartite(std::span<const int> part_sizes);
Graph complete_multipartite(std::initializer_list<int> part_sizes);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram i+5 -- ((i+2) mod 5)+5.
Graph petersen();
Graph petersen_complement();

/// Cycle 0..c-1 plus two non-adjacent hubs c and c+1 joined to every cycle vertex.
Graph double_axle_wheel(int c);

/// Random k-tree: starts from K_k and joins each new vertex to a uniformly chosen existing k-clique.
Graph k_tree(int k, int n, std::uint64_t seed);

/// Catalog lookup used by the CLI: complete, multipartite, petersen, petersen_complement,
/// double_axle_wheel, cycle, path, k_tree. Throws GraphError for unknown names or bad params.
Graph named_graph(std::string_view name, std::span<const long long> params);

}  // namespace triminor
