#include "kdmv/graph6.hpp"

#include <istream>
#include <sstream>

#include "kdmv/errors.hpp"

namespace kdmv {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw ParseError(std::string("graph6: invalid character '") + c + "'");
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: 36-bit size form exceeds supported order");
    if (text.size() < 4) throw ParseError("graph6: truncated long-form header");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    if (n < 63) throw ParseError("graph6: long-form header used for n < 63");
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n > VertexSet::kMaxVertices) throw SizeError("graph6: order " + std::to_string(n) + " exceeds supported maximum");

  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " + std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  long k = 0;
  auto bit_at = [&](long idx) { return (sextet(text[pos + idx / 6]) >> (5 - idx % 6)) & 1; };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bit_at(k)) g.add_edge(i, j);
  for (long rest = bits; rest < static_cast<long>(need) * 6; ++rest)
    if (bit_at(rest)) throw ParseError("graph6: nonzero padding bits");
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_graph6(t));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = -1;
  long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: missing or invalid 'n m' header");
  if (n > VertexSet::kMaxVertices) throw SizeError("edge list: order " + std::to_string(n) + " exceeds supported maximum");
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = -1;
    long v = -1;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw ParseError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing content '" + rest + "'");
  return g;
}

std::string to_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::ostringstream out;
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace kdmv
