#include "triminor/rigidity.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace triminor {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 sub(u64 a, u64 b) { return a >= b ? a - b : a + kStressPrime - b; }

u64 mul(u64 a, u64 b) {
  const u128 x = static_cast<u128>(a) * b;
  // Mersenne reduction: x = hi * 2^61 + lo, and 2^61 = 1 (mod p)
  u64 r = static_cast<u64>(x & kStressPrime) + static_cast<u64>(x >> 61);
  return r >= kStressPrime ? r - kStressPrime : r;
}

u64 power(u64 a, u64 e) {
  u64 r = 1;
  for (; e != 0; e >>= 1, a = mul(a, a)) {
    if (e & 1U) r = mul(r, a);
  }
  return r;
}

u64 inverse(u64 a) { return power(a, kStressPrime - 2); }

void check_dimension(int d) {
  if (d < 1 || d > 8) throw GraphError("stress dimension must be in 1..8");
}

}  // namespace

int stress_matrix_rank(const Graph& g, int d, const std::vector<std::uint64_t>& coords) {
  check_dimension(d);
  const int n = g.order();
  const std::size_t cols = static_cast<std::size_t>(n * d);
  if (coords.size() != cols) throw GraphError("stress_matrix_rank: need n*d coordinates");
  std::vector<std::vector<u64>> rows;
  for (const Edge& e : g.edges()) {
    std::vector<u64> row(cols, 0);
    for (int i = 0; i < d; ++i) {
      const u64 pu = coords[static_cast<std::size_t>(e.u * d + i)];
      const u64 pv = coords[static_cast<std::size_t>(e.v * d + i)];
      row[static_cast<std::size_t>(e.u * d + i)] = sub(pu, pv);
      row[static_cast<std::size_t>(e.v * d + i)] = sub(pv, pu);
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& top = rows[static_cast<std::size_t>(rank)];
    const u64 inv = inverse(top[c]);
    for (std::size_t k = c; k < cols; ++k) top[k] = mul(top[k], inv);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      const u64 f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = sub(rows[r][k], mul(f, top[k]));
    }
    ++rank;
  }
  return rank;
}

StressVerdict stress_space_dim(const Graph& g, int d, std::uint64_t seed, int trials) {
  check_dimension(d);
  if (trials < 1) throw GraphError("stress_space_dim: trials must be positive");
  const int m = g.edge_count();
  StressVerdict out;
  out.dimension = m;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> coord(0, kStressPrime - 1);
  for (int t = 0; t < trials && out.dimension > 0; ++t) {
    std::vector<u64> coords(static_cast<std::size_t>(g.order() * d));
    for (auto& x : coords) x = coord(rng);
    out.dimension = std::min(out.dimension, m - stress_matrix_rank(g, d, coords));
    ++out.trials;
  }
  if (out.dimension == 0) {
    out.verdict = StressKind::stress_free;
    out.error_bound = 0.0;
  } else {
    out.verdict = StressKind::stressed;
    out.error_bound = std::pow(static_cast<double>(m) / static_cast<double>(kStressPrime), out.trials);
  }
  return out;
}

WhiteleyResult whiteley_reduce(const Graph& g, int d) {
  WhiteleyResult out{g, {}};
  for (bool found = true; found;) {
    found = false;
    for (const Edge& e : out.graph.edges()) {
      const int common = triangles_on_edge(out.graph, e.u, e.v);
      if (common > d - 1) continue;
      out.log.push_back({e, common});
      out.graph = contract_edge(out.graph, e.u, e.v).graph;
      found = true;
      break;
    }
  }
  return out;
}

}  // namespace triminor
