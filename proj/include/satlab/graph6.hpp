#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "satlab/graph.hpp"

namespace satlab {

// Standard graph6 text form: header byte n+63 for n <= 62 (or '~' plus three
// 6-bit bytes for 63 <= n), then the upper triangle in column-major order
// packed 6 bits per printable byte, each offset by 63.

inline std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
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

inline Graph decode_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size())
      throw std::invalid_argument("graph6: truncated input");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad byte");
    return c - 63;
  };
  int n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    n = next();
    n = n << 6 | next();
    n = n << 6 | next();
  }
  if (n > kMaxOrder) throw std::invalid_argument("graph6: order > 64");
  Graph g = Graph::empty(n);
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if (acc >> (nbits - 1) & 1) g = g.with_edge(u, v);
      --nbits;
    }
  }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  if (pos != text.size()) throw std::invalid_argument("graph6: trailing bytes");
  return g;
}

}  // namespace satlab
