#include "coal/codec.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace coal {

namespace {

struct SourceLine {
  std::string_view text;
  int number;  // 1-based
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace((unsigned char)s.front())) s.remove_prefix(1);
  while (!s.empty() && std::isspace((unsigned char)s.back())) s.remove_suffix(1);
  return s;
}

// Blank lines and lines starting with '#' are ignored.
std::vector<SourceLine> content_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    size_t len = (nl == std::string_view::npos) ? text.size() - pos : nl - pos;
    std::string_view line = strip(text.substr(pos, len));
    ++number;
    if (!line.empty() && line.front() != '#') out.push_back({line, number});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] void fail_line(int line, const std::string& msg) {
  throw ParseError("edge_list: line " + std::to_string(line) + ": " + msg);
}

std::vector<long> line_ints(const SourceLine& line, size_t expected) {
  std::vector<long> out;
  std::string_view s = line.text;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    if (i >= s.size()) break;
    long value = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc{} || (p != s.data() + s.size() &&
                              !std::isspace((unsigned char)*p)))
      fail_line(line.number, "expected integers, got '" + std::string(s) + "'");
    out.push_back(value);
    i = (size_t)(p - s.data());
  }
  if (out.size() != expected)
    fail_line(line.number, "expected " + std::to_string(expected) +
                               " integers, got " + std::to_string(out.size()));
  return out;
}

Graph parse_edge_list(std::string_view text, int max_n) {
  auto lines = content_lines(text);
  if (lines.empty())
    throw ParseError("edge_list: missing header line \"n m\"");
  auto header = line_ints(lines[0], 2);
  long n = header[0], m = header[1];
  if (n < 0 || m < 0) fail_line(lines[0].number, "negative header value");
  if (n > kHardVertexLimit)
    throw CapError("edge_list: n=" + std::to_string(n) + " exceeds hard limit " +
                   std::to_string(kHardVertexLimit));
  if (n > max_n)
    throw CapError("edge_list: n=" + std::to_string(n) + " exceeds cap " +
                   std::to_string(max_n));
  if (m > n * (n - 1) / 2)
    fail_line(lines[0].number,
              "edge count " + std::to_string(m) + " exceeds n(n-1)/2");
  if ((long)lines.size() - 1 < m)
    throw ParseError("edge_list: expected " + std::to_string(m) +
                     " edge lines, found " + std::to_string(lines.size() - 1));
  if ((long)lines.size() - 1 > m)
    fail_line(lines[1 + m].number, "unexpected extra line");
  Graph g((int)n);
  for (long i = 0; i < m; ++i) {
    const SourceLine& line = lines[1 + i];
    auto uv = line_ints(line, 2);
    long u = uv[0], v = uv[1];
    for (long x : {u, v})
      if (x < 0 || x >= n)
        fail_line(line.number, "vertex index " + std::to_string(x) +
                                   " out of range (n=" + std::to_string(n) + ")");
    if (u == v) fail_line(line.number, "self-loop at vertex " + std::to_string(u));
    if (g.has_edge((int)u, (int)v))
      fail_line(line.number,
                "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge((int)u, (int)v);
  }
  return g;
}

std::string encode_edge_list(const Graph& g) {
  std::string s = std::to_string(g.n()) + " " + std::to_string(g.m());
  for (auto [u, v] : g.edges())
    s += "\n" + std::to_string(u) + " " + std::to_string(v);
  return s;
}

Graph parse_graph6(std::string_view text, int max_n) {
  while (!text.empty() && std::isspace((unsigned char)text.back()))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  unsigned b0 = (unsigned char)text[0];
  if (b0 == 126)
    throw Error("graph6: long size form (n > 62) unsupported");
  if (b0 < 63 || b0 > 125)
    throw ParseError("graph6: invalid size byte at offset 0");
  int n = (int)b0 - 63;
  if (n > max_n)
    throw CapError("graph6: n=" + std::to_string(n) + " exceeds cap " +
                   std::to_string(max_n));
  int nbits = n * (n - 1) / 2;
  int need = (nbits + 5) / 6;
  if ((int)text.size() - 1 != need)
    throw ParseError("graph6: expected " + std::to_string(need) +
                     " data bytes after the size byte, found " +
                     std::to_string(text.size() - 1));
  Graph g(n);
  auto pairs = triangle_pairs(n);
  for (int i = 0; i < need; ++i) {
    unsigned b = (unsigned char)text[1 + i];
    if (b < 63 || b > 126)
      throw ParseError("graph6: invalid byte at offset " + std::to_string(1 + i));
    unsigned group = b - 63;
    for (int j = 0; j < 6; ++j) {
      bool bit = (group >> (5 - j)) & 1;
      int k = i * 6 + j;
      if (k < nbits) {
        if (bit) g.add_edge(pairs[k].first, pairs[k].second);
      } else if (bit) {
        throw ParseError("graph6: nonzero padding bit at offset " +
                         std::to_string(1 + i));
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  std::string s(1, (char)(63 + n));
  auto pairs = triangle_pairs(n);
  unsigned acc = 0;
  int have = 0;
  for (auto [u, v] : pairs) {
    acc = (acc << 1) | (g.has_edge(u, v) ? 1u : 0u);
    if (++have == 6) {
      s.push_back((char)(63 + acc));
      acc = 0;
      have = 0;
    }
  }
  if (have) s.push_back((char)(63 + (acc << (6 - have))));
  return s;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format, int max_n) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text, max_n)
                                         : parse_graph6(text, max_n);
}

std::string encode_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? encode_edge_list(g)
                                         : encode_graph6(g);
}

GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (std::isspace((unsigned char)c)) continue;
    if (c == '#' || (c >= '0' && c <= '9')) return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
  }
  throw ParseError("cannot detect format of empty input");
}

}  // namespace coal
