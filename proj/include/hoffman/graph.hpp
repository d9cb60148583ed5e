#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "hoffman/error.hpp"

namespace hoffman {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph.
///
/// Adjacency is stored as one bit row per vertex (64-bit words) plus sorted
/// neighbor lists; both are fixed at construction.
class Graph {
 public:
  Graph() = default;

  /// Graph on n vertices with the given edges. Loops and duplicate edges are
  /// rejected.
  Graph(int n, std::span<const Edge> edges) : n_(n), words_(word_count(n)) {
    if (n < 0) throw InputError("Graph: negative vertex count");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("Graph: edge endpoint out of range");
      if (u == v) throw InputError("Graph: self-loop at vertex " + std::to_string(u));
      if (test(u, v)) throw InputError("Graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
      set(u, v);
      set(v, u);
    }
    finish();
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Graph on n vertices where {u, v} is an edge iff adjacent(u, v) for u < v.
  template <class Pred>
  static Graph from_predicate(int n, Pred&& adjacent) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
  }

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return test(u, v); }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words() const { return words_; }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  int common_neighbors(Vertex u, Vertex v) const {
    auto ru = row(u), rv = row(v);
    int count = 0;
    for (std::size_t w = 0; w < words_; ++w) count += std::popcount(ru[w] & rv[w]);
    return count;
  }

  /// Common valency when regular, -1 otherwise (and for the null graph).
  int regular_degree() const {
    if (n_ == 0) return -1;
    const int k = degree(0);
    for (Vertex v = 1; v < n_; ++v)
      if (degree(v) != k) return -1;
    return k;
  }
  bool is_regular() const { return regular_degree() >= 0; }

  bool is_complete() const { return edge_count_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2; }
  bool is_empty() const { return edge_count_ == 0; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;

  static std::size_t word_count(int n) { return n <= 0 ? 0 : (static_cast<std::size_t>(n) + 63) / 64; }

  bool test(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void set(Vertex u, Vertex v) { bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  void finish() {
    adj_.assign(n_, {});
    edge_count_ = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (test(u, v)) {
          adj_[u].push_back(v);
          if (u < v) ++edge_count_;
        }
  }
};

inline Graph complement(const Graph& g) {
  return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// BFS distances from a single source; kUnreachable for other components.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : g.neighbors(u))
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
  }
  return dist;
}

/// All-pairs distance matrix (row-major n*n).
inline std::vector<int> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), d.begin() + static_cast<std::ptrdiff_t>(s) * n);
  }
  return d;
}

/// BFS vertex order from `start`, neighbors visited by increasing index;
/// remaining components follow from their smallest vertex.
inline std::vector<Vertex> bfs_order(const Graph& g, Vertex start) {
  std::vector<Vertex> order;
  std::vector<char> seen(g.order(), 0);
  auto run = [&](Vertex s) {
    std::queue<Vertex> queue;
    seen[s] = 1;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      order.push_back(u);
      for (Vertex v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          queue.push(v);
        }
    }
  };
  if (g.order() > 0) run(start);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v]) run(v);
  return order;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

/// Proper 2-coloring (0/1 per vertex) if the graph is bipartite, else empty.
inline std::vector<int> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push(v);
        } else if (side[v] == side[u]) {
          return {};
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return g.order() == 0 || !bipartition(g).empty(); }

/// Number of triangles.
inline long long triangle_count(const Graph& g) {
  long long count = 0;
  for (auto [u, v] : g.edges()) count += g.common_neighbors(u, v);
  return count / 3;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline bool is_coclique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace hoffman
