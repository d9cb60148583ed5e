#pragma once

#include <map>
#include <optional>
#include <string>

#include "hoffman/graph.hpp"
#include "hoffman/quadratic.hpp"

namespace hoffman {

enum class RegularityKind { Irregular, Regular, EdgeRegular, CoEdgeRegular, StronglyRegular };

inline std::string to_string(RegularityKind kind) {
  switch (kind) {
    case RegularityKind::Irregular: return "irregular";
    case RegularityKind::Regular: return "regular";
    case RegularityKind::EdgeRegular: return "edge-regular";
    case RegularityKind::CoEdgeRegular: return "co-edge-regular";
    case RegularityKind::StronglyRegular: return "strongly-regular";
  }
  return "?";
}

enum class Primitivity { NotApplicable, Primitive, Imprimitive };

inline std::string to_string(Primitivity p) {
  switch (p) {
    case Primitivity::NotApplicable: return "n/a";
    case Primitivity::Primitive: return "primitive";
    case Primitivity::Imprimitive: return "imprimitive";
  }
  return "?";
}

/// Combinatorial parameters (n, k, a, c) of a strongly regular graph.
struct SrgParams {
  int n = 0;
  int k = 0;
  int a = 0;
  int c = 0;

  /// c(n-k-1) = k(k-a-1), in integers.
  bool counts_consistent() const {
    return static_cast<long long>(c) * (n - k - 1) == static_cast<long long>(k) * (k - a - 1);
  }
  bool primitive() const { return c > 0 && c < k; }
  SrgParams complement() const { return {n, n - k - 1, n - 2 * k + c - 2, n - 2 * k + a}; }

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

inline std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.a) + "," +
         std::to_string(p.c) + ")";
}

/// Edge-regularity requires at least one edge and co-edge-regularity at
/// least one non-adjacent pair, so complete and empty graphs are never
/// strongly regular here.
struct RegularityClass {
  RegularityKind kind = RegularityKind::Irregular;
  std::optional<int> k;
  std::optional<int> a;
  std::optional<int> c;
  Primitivity primitive = Primitivity::NotApplicable;

  bool regular() const { return kind != RegularityKind::Irregular; }
  bool edge_regular() const { return regular() && a.has_value(); }
  bool co_edge_regular() const { return regular() && c.has_value(); }
  bool strongly_regular() const { return kind == RegularityKind::StronglyRegular; }

  std::optional<SrgParams> srg(int n) const {
    if (!strongly_regular()) return std::nullopt;
    return SrgParams{n, *k, *a, *c};
  }
};

inline RegularityClass classify_regularity(const Graph& g) {
  RegularityClass out;
  const int n = g.order();
  const int k = g.regular_degree();
  if (k < 0) return out;
  out.kind = RegularityKind::Regular;
  out.k = k;

  std::optional<int> a, c;
  bool a_const = true, c_const = true;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const int cn = g.common_neighbors(u, v);
      auto& slot = g.adjacent(u, v) ? a : c;
      auto& ok = g.adjacent(u, v) ? a_const : c_const;
      if (!slot) slot = cn;
      else if (*slot != cn) ok = false;
    }
  if (a && a_const) out.a = a;
  if (c && c_const) out.c = c;

  if (out.a && out.c) {
    out.kind = RegularityKind::StronglyRegular;
    const SrgParams p{n, k, *out.a, *out.c};
    if (!p.counts_consistent()) throw std::logic_error("classify_regularity: double count failed for " + to_string(p));
    out.primitive = is_connected(g) && is_connected(complement(g)) ? Primitivity::Primitive : Primitivity::Imprimitive;
  } else if (out.a) {
    out.kind = RegularityKind::EdgeRegular;
  } else if (out.c) {
    out.kind = RegularityKind::CoEdgeRegular;
  }
  return out;
}

/// Common-neighbor counts over adjacent and non-adjacent vertex pairs.
/// Averages are empty when the corresponding pair set is empty.
struct CommonNeighborProfile {
  std::map<int, long long> adjacent_counts;     // count -> number of edges
  std::map<int, long long> nonadjacent_counts;  // count -> number of non-edges
  std::optional<Rational> a_bar;
  std::optional<Rational> c_bar;
};

inline CommonNeighborProfile common_neighbor_profile(const Graph& g) {
  CommonNeighborProfile out;
  long long a_sum = 0, a_pairs = 0, c_sum = 0, c_pairs = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const int cn = g.common_neighbors(u, v);
      if (g.adjacent(u, v)) {
        ++out.adjacent_counts[cn];
        a_sum += cn;
        ++a_pairs;
      } else {
        ++out.nonadjacent_counts[cn];
        c_sum += cn;
        ++c_pairs;
      }
    }
  if (a_pairs > 0) out.a_bar = Rational(a_sum, a_pairs);
  if (c_pairs > 0) out.c_bar = Rational(c_sum, c_pairs);
  return out;
}

}  // namespace hoffman
