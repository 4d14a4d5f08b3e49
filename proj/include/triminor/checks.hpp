#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "triminor/graph.hpp"
#include "triminor/report.hpp"

namespace triminor {

enum class CheckId {
  wheels_r6,
  list22_r7,
  lemma_compk7,
  lemma_numberk7,
  lemma_compk8,
  claim_2edge_p10,
  claim_p10_subgraphs,
  k2222_two_edges,
  k333_additions,
  k22222_maximal,
  density_ktree,
  density_premise,
  coloring_bound,
  split_recognizer,
  alpha_inequality,
};

class CheckError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view to_string(CheckId id);
/// Accepts the dashed ids ("lemma-compk8"); throws CheckError otherwise.
CheckId parse_check_id(std::string_view text);
std::span<const CheckId> all_checks();

struct CheckParams {
  /// lemma-compk8 only: one order in 8..11 instead of the default sweep 8..10.
  std::optional<int> n;
  /// n = 11 for lemma-compk8 is refused unless set.
  bool long_jobs = false;
  int workers = 1;
  std::uint64_t seed = 1;
  /// Sample count for the randomized checks; 0 keeps each check's default.
  int samples = 0;
  /// Graphs on which the neighbourhood lemmas run; empty means regenerate them.
  std::optional<std::filesystem::path> corpus;
};

using ReportSink = std::function<void(const ReportLine&)>;

/// Runs one check. Records arrive in a fixed order whatever the worker count; the last
/// record is a summary whose witness starts with "count=". Returns whether the claim held.
bool run_check(CheckId id, const CheckParams& params, const ReportSink& sink);
std::vector<ReportLine> run_check(CheckId id, const CheckParams& params = {});

/// The K6-minor-free graphs with minimum degree 5 on at most 9 vertices, generated.
std::vector<Graph> list22_corpus(int workers = 1);

/// Vertices of h all of whose incident edges lie in at least `min_triangles` triangles of h.
VertexSet triangle_saturated_vertices(const Graph& h, int min_triangles);
/// Same, with "exactly `triangles`" in place of "at least".
VertexSet triangle_exact_vertices(const Graph& h, int triangles);

}  // namespace triminor
