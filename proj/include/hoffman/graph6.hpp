#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hoffman/error.hpp"
#include "hoffman/graph.hpp"

namespace hoffman {

// graph6 with the single-byte size header only.
inline constexpr int kGraph6MaxOrder = 62;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parse one graph6 line. An optional ">>graph6<<" prefix and surrounding
/// whitespace are ignored.
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  const int first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw ParseError("graph6: multi-byte size header unsupported (n > 62)");
  if (first < 63 || first > 126) throw ParseError("graph6: invalid size byte");
  const int n = first - 63;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) +
                     ", got " + std::to_string(body.size()));

  std::vector<int> values(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: data byte out of range at offset " + std::to_string(i + 1));
    values[i] = c - 63;
  }
  auto bit = [&](std::size_t index) { return (values[index / 6] >> (5 - index % 6)) & 1; };

  std::vector<Edge> edges;
  std::size_t index = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++index)
      if (bit(index)) edges.emplace_back(i, j);
  for (; index < expected * 6; ++index)
    if (bit(index)) throw ParseError("graph6: nonzero padding bits");
  return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw InputError("graph6: n > 62 unsupported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Edge-list text: first non-blank line "n", then one "u v" pair per line
/// (0-based). Everything after '#' is a comment.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(std::string_view(line).substr(0, line.find('#')));
    if (t.empty()) continue;
    std::istringstream fields{std::string(t)};
    if (n < 0) {
      if (!(fields >> n) || n < 0) throw ParseError("edge list: bad vertex count on line " + std::to_string(line_no));
    } else {
      int u = 0, v = 0;
      if (!(fields >> u >> v)) throw ParseError("edge list: expected 'u v' on line " + std::to_string(line_no));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError("edge list: vertex out of range on line " + std::to_string(line_no));
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (fields >> extra) throw ParseError("edge list: trailing tokens on line " + std::to_string(line_no));
  }
  if (n < 0) throw ParseError("edge list: missing vertex count");
  try {
    return Graph(n, edges);
  } catch (const InputError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

/// True when the text looks like the edge-list format (its first meaningful
/// line is a bare integer); graph6 lines never start with a digit.
inline bool looks_like_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    return std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }
  return false;
}

}  // namespace hoffman
