#include "chromadisc/graph6.hpp"

#include <sstream>

#include "chromadisc/errors.hpp"

namespace chromadisc {

namespace {

constexpr int kBias = 63;

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw ParseError(ParseErrorKind::kCharacterOutOfRange,
                     std::string("graph6: character '") + c + "' outside [63, 126]");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError(ParseErrorKind::kEmptyRecord, "graph6: empty record");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw ParseError(ParseErrorKind::kTooManyVertices, "graph6: eight-byte header not supported");
    }
    if (text.size() < 4) {
      throw ParseError(ParseErrorKind::kMalformedHeader, "graph6: truncated '~' header");
    }
    for (std::size_t i = 1; i <= 3; ++i) {
      const int v = static_cast<unsigned char>(text[i]) - kBias;
      if (v < 0 || v > 63) {
        throw ParseError(ParseErrorKind::kMalformedHeader, "graph6: bad byte in '~' header");
      }
      n = (n << 6) | v;
    }
    if (n < 63) {
      throw ParseError(ParseErrorKind::kMalformedHeader,
                       "graph6: '~' header used for order below 63");
    }
    pos = 4;
  } else {
    const int v = static_cast<unsigned char>(text[0]) - kBias;
    if (v < 0 || v > 62) {
      throw ParseError(ParseErrorKind::kMalformedHeader, "graph6: bad size byte");
    }
    n = v;
    pos = 1;
  }
  if (n > kMaxVertices) {
    throw ParseError(ParseErrorKind::kTooManyVertices,
                     "graph6: order " + std::to_string(n) + " exceeds 64");
  }

  const auto pairs = graph6_pair_order(static_cast<int>(n));
  const std::size_t body_bytes = (pairs.size() + 5) / 6;
  if (text.size() - pos != body_bytes) {
    throw ParseError(ParseErrorKind::kLengthMismatch,
                     "graph6: expected " + std::to_string(body_bytes) + " data bytes, got " +
                         std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  for (std::size_t byte = 0; byte < body_bytes; ++byte) {
    const int bits = sextet(text[pos + byte]);
    for (int k = 0; k < 6; ++k) {
      if (((bits >> (5 - k)) & 1) == 0) continue;
      const std::size_t idx = byte * 6 + static_cast<std::size_t>(k);
      if (idx >= pairs.size()) {
        throw ParseError(ParseErrorKind::kTrailingBitsNonzero, "graph6: nonzero padding bits");
      }
      g.add_edge(pairs[idx].first, pairs[idx].second);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  const auto pairs = graph6_pair_order(n);
  int acc = 0;
  int filled = 0;
  for (auto [i, j] : pairs) {
    acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(acc + kBias));
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long n = 0;
  long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw ParseError(ParseErrorKind::kBadEdgeList, "edge list: expected header \"n m\"");
  }
  if (n > kMaxVertices) {
    throw ParseError(ParseErrorKind::kTooManyVertices, "edge list: order exceeds 64");
  }
  Graph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) {
      throw ParseError(ParseErrorKind::kBadEdgeList,
                       "edge list: expected " + std::to_string(m) + " edges");
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError(ParseErrorKind::kBadEdgeList,
                       "edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace chromadisc
