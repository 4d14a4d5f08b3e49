#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "triminor/graph.hpp"

namespace triminor {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 token (no trailing whitespace or comment).
Graph parse_graph6(std::string_view text);
/// Encodes with the graph's own vertex order; no relabeling.
std::string write_graph6(const Graph& g);

struct CorpusEntry {
  Graph graph;
  std::string text;     ///< the graph6 token as it appeared
  std::string comment;  ///< anything after the first whitespace, trimmed
  int line = 0;         ///< 1-based line number in the source
};

/// One graph6 token per line, optionally followed by whitespace and a comment.
/// Blank lines and a leading ">>graph6<<" marker are skipped.
std::vector<CorpusEntry> read_corpus(std::istream& in, std::string_view source_name = "<stream>");
std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path);
std::vector<Graph> read_corpus_graphs(const std::filesystem::path& path);

void write_corpus(const std::filesystem::path& path, const std::vector<Graph>& graphs);

}  // namespace triminor
