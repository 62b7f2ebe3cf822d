#pragma once

#include <string>
#include <string_view>

#include "hamheavy/error.hpp"
#include "hamheavy/graph.hpp"

// graph6 encoding (undirected simple graphs), restricted to n <= 64.
//
//   N(n): n + 63 when n <= 62, otherwise '~' followed by n as 18 bits in
//         three 6-bit bytes (big-endian), each + 63.
//   R(g): bits x(0,1) x(0,2) x(1,2) x(0,3) ... (upper triangle, column by
//         column), zero-padded to a multiple of 6, packed 6 bits per byte + 63.

namespace hamheavy {

namespace detail {
inline constexpr int kG6Bias = 63;
inline constexpr int kG6Max = 126;
}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kG6Bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + detail::kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + detail::kG6Bias));
    out.push_back(static_cast<char>((n & 63) + detail::kG6Bias));
  }
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + detail::kG6Bias));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + detail::kG6Bias));
  return out;
}

/// Parses one graph6 line. An optional ">>graph6<<" prefix and a trailing
/// line terminator are accepted; anything else malformed throws ParseError.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 line", base);

  auto value = [&](std::size_t i) {
    int c = static_cast<unsigned char>(text[i]);
    if (c < detail::kG6Bias || c > detail::kG6Max) {
      throw ParseError("character outside graph6 range", base + i);
    }
    return c - detail::kG6Bias;
  };

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("order exceeds 64", base + 1);
    if (text.size() < 4) throw ParseError("truncated order field", base + text.size());
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n > Graph::kMaxOrder) throw ParseError("order exceeds 64", base + 1);
    pos = 4;
  } else {
    n = value(0);
    pos = 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw ParseError("truncated adjacency body", base + text.size());
  if (text.size() > pos + body) throw ParseError("trailing bytes after adjacency body", base + pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = value(pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = value(pos + body - 1);
    int pad = 6 - static_cast<int>(bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("nonzero padding bits", base + pos + body - 1);
  }
  return g;
}

}  // namespace hamheavy
