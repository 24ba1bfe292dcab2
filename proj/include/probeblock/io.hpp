#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "probeblock/graph.hpp"

namespace probeblock {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { edge_list, graph6 };

namespace detail {

inline bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (tok[0] == '-' || tok[0] == '+') {
    neg = tok[0] == '-';
    i = 1;
    if (tok.size() == 1) return false;
  }
  long long v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
    v = v * 10 + (tok[i] - '0');
    if (v > (1LL << 40)) return false;
  }
  out = neg ? -v : v;
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace detail

/// Edge-list text: header `n m`, then m lines `u v`. Lines starting with `#`
/// and blank lines are skipped. Repeated pairs collapse to one edge.
inline Graph parse_edge_list(std::string_view text) {
  long long n = -1;
  long long m = -1;
  long long seen = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks.size() != 2) throw ParseError(line_no, "expected two integers");
    long long a = 0;
    long long b = 0;
    if (!detail::parse_int(toks[0], a) || !detail::parse_int(toks[1], b)) {
      throw ParseError(line_no, "malformed integer");
    }
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError(line_no, "malformed header: negative count");
      if (a > (1LL << 31) - 1) throw ParseError(line_no, "malformed header: n too large");
      n = a;
      m = b;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (seen == m) throw ParseError(line_no, "more edge lines than the header's m");
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (a == b) throw ParseError(line_no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    ++seen;
  }
  if (n < 0) throw ParseError(line_no, "missing header");
  if (seen != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(seen));
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

/// graph6 with the single-byte size prefix (n <= 62).
inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError(1, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError(1, "graph6 byte out of range");
  }
  const int n = text[0] - 63;
  if (n > 62) throw ParseError(1, "graph6 sizes above 62 are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw ParseError(1, "graph6 length " + std::to_string(text.size()) + " does not match n=" +
                            std::to_string(n));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline std::string to_graph6(const Graph& g) {
  if (g.order() > 62) throw DomainError("graph6 output supports n <= 62 only");
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

/// `.g6` selects graph6; anything else is read as an edge list.
inline GraphFormat format_for_path(const std::string& path) {
  return path.ends_with(".g6") ? GraphFormat::graph6 : GraphFormat::edge_list;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph read_graph_file(const std::string& path) {
  return parse_graph(read_text_file(path), format_for_path(path));
}

}  // namespace probeblock
