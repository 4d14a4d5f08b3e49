#include "triminor/graph6.hpp"

#include <fstream>

namespace triminor {

namespace {

constexpr int kOffset = 63;

int sextet(char c, std::string_view text) {
  const int value = static_cast<unsigned char>(c) - kOffset;
  if (value < 0 || value > 63) {
    throw FormatError("graph6: byte outside 63..126 in '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t pos = 0;
  long long n = sextet(text[0], text);
  pos = 1;
  if (n == 63) {
    if (text.size() < 4) throw FormatError("graph6: truncated vertex-count header");
    if (text[1] == '~') throw FormatError("graph6: vertex counts above 258047 are not supported");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i], text);
    pos = 4;
  }
  if (n < 1) throw FormatError("graph6: graph has no vertices");
  if (n > kMaxVertices) throw FormatError("graph6: n=" + std::to_string(n) + " exceeds 64 vertices");

  const long long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < bytes) throw FormatError("graph6: truncated adjacency payload");
  if (text.size() - pos > bytes) throw FormatError("graph6: trailing bytes after payload");

  std::array<VertexSet, kMaxVertices> rows{};
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = sextet(text[pos + static_cast<std::size_t>(k / 6)], text);
      if ((word >> (5 - k % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text.back(), text);
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) throw FormatError("graph6: non-zero padding bits");
  }
  return Graph::from_rows(static_cast<int>(n), rows);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kOffset));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kOffset));
  return out;
}

std::vector<CorpusEntry> read_corpus(std::istream& in, std::string_view source_name) {
  std::vector<CorpusEntry> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    const auto end = line.find_first_of(" \t", start);
    std::string token = line.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (token == ">>graph6<<") continue;
    CorpusEntry entry;
    try {
      entry.graph = parse_graph6(token);
    } catch (const FormatError& e) {
      throw FormatError(std::string(source_name) + ":" + std::to_string(number) + ": " + e.what());
    }
    entry.text = std::move(token);
    if (end != std::string::npos) {
      const auto c0 = line.find_first_not_of(" \t", end);
      if (c0 != std::string::npos) {
        const auto c1 = line.find_last_not_of(" \t");
        entry.comment = line.substr(c0, c1 - c0 + 1);
      }
    }
    entry.line = number;
    out.push_back(std::move(entry));
  }
  if (in.bad()) throw FormatError(std::string(source_name) + ": read failure");
  return out;
}

std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open corpus file");
  return read_corpus(in, path.string());
}

std::vector<Graph> read_corpus_graphs(const std::filesystem::path& path) {
  std::vector<Graph> out;
  for (auto& e : read_corpus(path)) out.push_back(std::move(e.graph));
  return out;
}

void write_corpus(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw FormatError(path.string() + ": cannot open for writing");
  for (const auto& g : graphs) out << write_graph6(g) << '\n';
  if (!out) throw FormatError(path.string() + ": write failure");
}

}  // namespace triminor
