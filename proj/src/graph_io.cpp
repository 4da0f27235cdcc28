#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "nis/error.hpp"
#include "nis/graph.hpp"

namespace nis {

namespace {

constexpr int kGraph6MaxOrder = 62;
constexpr int kGraph6Bias = 63;

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw LimitError("graph6 output supports n <= 62, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + kGraph6Bias));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kGraph6Bias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string", 1, 1);
  const int first = static_cast<unsigned char>(text[0]);
  if (first < kGraph6Bias || first > 126) throw ParseError("invalid graph6 order byte", 1, 1);
  const int n = first - kGraph6Bias;
  if (n > kGraph6MaxOrder) throw ParseError("graph6 input supports n <= 62", 1, 1);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (pairs + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6 string has " + std::to_string(text.size()) + " bytes, expected " +
                         std::to_string(expected),
                     1, std::min(text.size(), expected) + 1);
  }
  for (std::size_t k = 1; k < text.size(); ++k) {
    const int c = static_cast<unsigned char>(text[k]);
    if (c < kGraph6Bias || c > 126) throw ParseError("invalid graph6 data byte", 1, k + 1);
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - kGraph6Bias;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto all = g.edges();
  out << g.order() << ' ' << all.size() << '\n';
  for (const Edge& e : all) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

struct Token {
  long long value;
  std::size_t line;
  std::size_t column;
};

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', pos), text.size());
    std::vector<Token> tokens;
    std::size_t i = pos;
    while (i < stop) {
      const char c = text[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < stop && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
      if (ec != std::errc() || ptr != text.data() + j) {
        throw ParseError("expected an integer, got '" + std::string(text.substr(i, j - i)) + "'",
                         line, i - pos + 1);
      }
      tokens.push_back({value, line, i - pos + 1});
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (stop == text.size()) break;
    pos = stop + 1;
    ++line;
  }
  return lines;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("missing header line \"n m\"", 1, 1);
  const auto& header = lines.front();
  if (header.size() != 2) {
    throw ParseError("header must be \"n m\"", header.front().line, header.front().column);
  }
  const long long n = header[0].value;
  const long long m = header[1].value;
  if (n < 0 || n > kMaxOrder) {
    throw ParseError("vertex count must lie in 0..64 (graph-core cap)", header[0].line,
                     header[0].column);
  }
  if (m < 0) throw ParseError("edge count must be non-negative", header[1].line, header[1].column);
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const auto& where = lines.back().back();
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1) + " edge lines",
                     where.line, where.column);
  }
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& row = lines[k];
    if (row.size() != 2) throw ParseError("edge line must be \"u v\"", row[0].line, row[0].column);
    for (const Token& t : row) {
      if (t.value < 0 || t.value >= n) {
        throw ParseError("endpoint " + std::to_string(t.value) + " outside 0.." +
                             std::to_string(n - 1),
                         t.line, t.column);
      }
    }
    if (row[0].value == row[1].value) throw ParseError("loop edge", row[1].line, row[1].column);
    edges.push_back({static_cast<int>(row[0].value), static_cast<int>(row[1].value)});
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace nis
