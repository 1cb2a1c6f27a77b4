#include <string>

#include "distinguo/errors.hpp"
#include "distinguo/graph.hpp"

namespace distinguo {

// graph6: N(n) header, then the upper triangle x(i,j), i < j, in column
// order (j = 1..n-1, i = 0..j-1) packed six bits per byte, big-endian,
// zero padded, each byte offset by 63.

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("graph6: missing length header", pos);

  auto sextet = [&](std::size_t at) -> int {
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range 63..126", at);
    return c - 63;
  };

  int n = 0;
  if (static_cast<unsigned char>(text[pos]) == 126) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
      throw ParseError("graph6: 8-byte length header exceeds supported order", pos);
    }
    if (pos + 4 > text.size()) throw ParseError("graph6: truncated length header", text.size());
    for (int k = 1; k <= 3; ++k) n = (n << 6) | sextet(pos + k);
    if (n < 63) throw ParseError("graph6: non-canonical length header", pos);
    pos += 4;
  } else {
    n = sextet(pos);
    pos += 1;
  }
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex", pos - 1);
  if (n > kMaxVertices) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds limit", pos - 1);
  }

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes) throw ParseError("graph6: truncated adjacency data", text.size());
  if (text.size() - pos > nbytes) throw ParseError("graph6: trailing bytes", pos + nbytes);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const std::size_t last = pos + nbytes - 1;
    const int pad = 6 - static_cast<int>(nbits % 6);
    if ((sextet(last) & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", last);
  }
  for (std::size_t at = pos; at < text.size(); ++at) sextet(at);
  return Graph(n, edges);
}

}  // namespace distinguo
