#include <string>
#include <string_view>
#include <vector>

#include "genpos/graph.hpp"

namespace genpos {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    throw TooLargeError("graph6 encoder supports at most 258047 vertices");
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  append_size(out, n);
  // Upper triangle column by column, packed big-endian into 6-bit groups.
  int bit = 5;
  int acc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.adjacent(u, v)) acc |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bit = 5;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(acc + kBias));
  return out;
}

Graph graph6_decode(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                           line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  if (line.empty()) throw MalformedGraph6Error("empty graph6 input");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size())
      throw MalformedGraph6Error("truncated graph6 input");
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126)
      throw MalformedGraph6Error("invalid graph6 character at byte " +
                                 std::to_string(pos - 1));
    return c - kBias;
  };

  int n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    // 126 marker: three (or for the 8-byte form, seven) size bytes follow.
    int a = next();
    if (a == 63) throw MalformedGraph6Error("graph6 inputs beyond 258047 vertices are unsupported");
    int b = next();
    int c = next();
    n = (a << 12) | (b << 6) | c;
  }

  std::vector<std::pair<int, int>> edges;
  int bit = -1;
  int acc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bit < 0) {
        acc = next();
        bit = 5;
      }
      if ((acc >> bit) & 1) edges.emplace_back(u, v);
      --bit;
    }
  }
  if (pos != line.size())
    throw MalformedGraph6Error("trailing bytes after graph6 payload");
  return build_graph(n, edges);
}

}  // namespace genpos
