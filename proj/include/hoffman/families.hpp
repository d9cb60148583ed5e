#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hoffman/error.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/graph6.hpp"
#include "hoffman/regularity.hpp"

namespace hoffman {

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle(n) requires n >= 3");
  return Graph::from_predicate(n, [n](Vertex u, Vertex v) { return v - u == 1 || v - u == n - 1; });
}

inline Graph path_graph(int n) {
  if (n < 1) throw InputError("path(n) requires n >= 1");
  return Graph::from_predicate(n, [](Vertex u, Vertex v) { return v - u == 1; });
}

inline Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete(n) requires n >= 1");
  return Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
}

inline Graph empty_graph(int n) {
  if (n < 1) throw InputError("empty(n) requires n >= 1");
  return Graph::from_predicate(n, [](Vertex, Vertex) { return false; });
}

/// Complete multipartite graph; vertices are numbered part by part.
inline Graph complete_multipartite_graph(const std::vector<int>& parts) {
  if (parts.empty()) throw InputError("complete_multipartite needs at least one part");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw InputError("complete_multipartite parts must be >= 1");
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  }
  return Graph::from_predicate(static_cast<int>(part_of.size()),
                               [&](Vertex u, Vertex v) { return part_of[u] != part_of[v]; });
}

/// L(K_{m,m}): the m x m rook's graph, vertex (i, j) -> i*m + j.
inline Graph rook_graph(int m) {
  if (m < 2) throw InputError("rook(m) requires m >= 2");
  return Graph::from_predicate(m * m, [m](Vertex u, Vertex v) { return u / m == v / m || u % m == v % m; });
}

/// Vertices are the r-subsets of {0..v-1} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int v, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(r);
  std::iota(current.begin(), current.end(), 0);
  if (r > v) return out;
  while (true) {
    out.push_back(current);
    int i = r - 1;
    while (i >= 0 && current[i] == v - r + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < r; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

/// L(K_m): 2-subsets adjacent when they meet.
inline Graph triangular_graph(int m) {
  if (m < 3) throw InputError("triangular(m) requires m >= 3");
  const auto pairs = k_subsets(m, 2);
  return Graph::from_predicate(static_cast<int>(pairs.size()), [&](Vertex u, Vertex v) {
    const auto& x = pairs[u];
    const auto& y = pairs[v];
    return x[0] == y[0] || x[0] == y[1] || x[1] == y[0] || x[1] == y[1];
  });
}

/// Kneser graph K(v, r): r-subsets adjacent when disjoint.
inline Graph kneser_graph(int v, int r = 2) {
  if (r < 1 || v < 2 * r) throw InputError("kneser(v, r) requires r >= 1 and v >= 2r");
  const auto sets = k_subsets(v, r);
  return Graph::from_predicate(static_cast<int>(sets.size()), [&](Vertex a, Vertex b) {
    for (int x : sets[a])
      if (std::find(sets[b].begin(), sets[b].end(), x) != sets[b].end()) return false;
    return true;
  });
}

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Paley graph over the prime field F_q, q = 1 (mod 4).
inline Graph paley_graph(int q) {
  if (!is_prime(q) || q % 4 != 1) throw InputError("paley(q) requires a prime q = 1 (mod 4)");
  std::vector<char> square(q, 0);
  for (int x = 1; x < q; ++x) square[(static_cast<long long>(x) * x) % q] = 1;
  return Graph::from_predicate(q, [&](Vertex u, Vertex v) { return square[(v - u) % q] != 0; });
}

inline Graph hypercube_graph(int d) {
  if (d < 1 || d > 12) throw InputError("hypercube(d) requires 1 <= d <= 12");
  return Graph::from_predicate(1 << d, [](Vertex u, Vertex v) { return std::popcount(static_cast<unsigned>(u ^ v)) == 1; });
}

/// A graph shipped as a graph6 literal, with the regularity data it must
/// reproduce when loaded.
struct EmbeddedGraph {
  std::string name;
  std::string description;
  std::string graph6;
  RegularityKind kind;
  int k;
  std::optional<int> a;
  std::optional<int> c;
};

inline const std::vector<EmbeddedGraph>& embedded_graphs() {
  static const std::vector<EmbeddedGraph> table = {
      {"shrikhande", "Cayley graph of Z4xZ4 on {+-(1,0), +-(0,1), +-(1,1)}", R"(OlfJHsHBGK_\oHWKeBK_\)",
       RegularityKind::StronglyRegular, 6, 2, 2},
      {"clebsch", "folded 5-cube", R"(Or`HOm@OhHBBEGHCgPSAJ)", RegularityKind::StronglyRegular, 5, 0, 2},
      {"schlafli", "skew-lines graph of the 27 lines on a cubic surface",
       R"(Z~~{ACbCwV_~NNVVllzjn]]}]^D\\LlkmyyNrrXemiizZHfxxKuyyIl}]BLw)", RegularityKind::StronglyRegular, 16, 10,
       8},
      {"schlafli-complement", "intersection graph of the 27 lines (collinearity graph of GQ(2,4))",
       R"(Z??B|z[zFg^?ooggQQCSO``@`_yaaqQRPDDoKKeXPTTCcuWEErHDDtQ@`{q?)", RegularityKind::StronglyRegular, 10, 1,
       5},
      {"chang1", "T(8) switched on a perfect matching of K8",
       R"([LoaRJJeBa_oCfL`_{}TGQfeDcs_{|waAsDVZUAO[nQqNSo[yw@b[HV^SIKRIW|_)", RegularityKind::StronglyRegular, 12,
       6, 4},
      {"chang2", "T(8) switched on C3 + C5 in K8",
       R"([LoaRJJeC\^MCcLa_|XinQcaDgc_cYFD]sHEZTE?[voqMuwbEBm[_qw^TgCJI?^e)", RegularityKind::StronglyRegular, 12,
       6, 4},
      {"chang3", "T(8) switched on C8 in K8",
       R"([LoaRJJeC\^MCcLa_|]TOQceDgs_c|wyAsHVZTAO[vQqMso[xw@[_ug_iTrbI?|b)", RegularityKind::StronglyRegular, 12,
       6, 4},
      {"icosahedron", "icosahedral graph (distance-regular, not strongly regular)", R"(KhFKFCrEk[n_)",
       RegularityKind::EdgeRegular, 5, 2, std::nullopt},
  };
  return table;
}

/// Decode an embedded entry and check it against its advertised parameters.
inline Graph load_embedded(const EmbeddedGraph& entry) {
  Graph g;
  try {
    g = parse_graph6(entry.graph6);
  } catch (const ParseError& e) {
    throw CatalogError("catalog entry '" + entry.name + "' does not decode: " + e.what());
  }
  const auto cls = classify_regularity(g);
  if (cls.kind != entry.kind || cls.k != entry.k || cls.a != entry.a || cls.c != entry.c)
    throw CatalogError("catalog entry '" + entry.name + "' failed its parameter self-check");
  return g;
}

inline const Graph* find_embedded(std::string_view name) {
  static const std::map<std::string, Graph, std::less<>> loaded = [] {
    std::map<std::string, Graph, std::less<>> m;
    for (const auto& e : embedded_graphs()) m.emplace(e.name, load_embedded(e));
    return m;
  }();
  auto it = loaded.find(name);
  return it == loaded.end() ? nullptr : &it->second;
}

namespace detail {

struct NamedSpec {
  std::string name;
  std::vector<std::string> args;
};

inline NamedSpec split_named(std::string_view text) {
  text = trim(text);
  NamedSpec out;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    out.name = std::string(text);
  } else {
    if (text.back() != ')') throw ParseError("named graph: missing ')' in '" + std::string(text) + "'");
    out.name = std::string(trim(text.substr(0, open)));
    const auto inner = text.substr(open + 1, text.size() - open - 2);
    int depth = 0;
    std::string current;
    for (char ch : inner) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        out.args.emplace_back(trim(current));
        current.clear();
      } else {
        current.push_back(ch);
      }
    }
    if (depth != 0) throw ParseError("named graph: unbalanced parentheses in '" + std::string(text) + "'");
    if (!trim(current).empty() || !out.args.empty()) out.args.emplace_back(trim(current));
  }
  std::transform(out.name.begin(), out.name.end(), out.name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  std::replace(out.name.begin(), out.name.end(), '_', '-');
  if (out.name.empty()) throw ParseError("named graph: empty family name");
  return out;
}

inline int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("named graph: '" + s + "' is not an integer");
  }
  if (used != s.size()) throw ParseError("named graph: '" + s + "' is not an integer");
  return v;
}

}  // namespace detail

/// Names accepted by named_graph (families take integer arguments).
inline std::vector<std::string> named_graph_families() {
  std::vector<std::string> out = {"cycle(n)",     "path(n)",          "complete(n)",     "empty(n)",
                                  "complete-multipartite(p1,...)",    "rook(m)",         "triangular(m)",
                                  "kneser(v[,r])", "paley(q)",        "hypercube(d)",    "petersen",
                                  "pentagon",     "complement(NAME)"};
  for (const auto& e : embedded_graphs()) out.push_back(e.name);
  return out;
}

/// Build a graph from "family(args)" text, e.g. "rook(3)", "paley(13)",
/// "shrikhande", "complement(triangular(6))".
inline Graph named_graph(std::string_view text) {
  const auto spec = detail::split_named(text);
  const auto& name = spec.name;
  auto ints = [&](std::size_t lo, std::size_t hi) {
    if (spec.args.size() < lo || spec.args.size() > hi)
      throw InputError("named graph '" + name + "': wrong number of arguments");
    std::vector<int> v;
    for (const auto& a : spec.args) v.push_back(detail::to_int(a));
    return v;
  };

  if (name == "complement") {
    if (spec.args.size() != 1) throw InputError("complement(NAME) takes one graph");
    return complement(named_graph(spec.args[0]));
  }
  if (name == "cycle") return cycle_graph(ints(1, 1)[0]);
  if (name == "path") return path_graph(ints(1, 1)[0]);
  if (name == "complete") return complete_graph(ints(1, 1)[0]);
  if (name == "empty") return empty_graph(ints(1, 1)[0]);
  if (name == "complete-multipartite") return complete_multipartite_graph(ints(1, 64));
  if (name == "rook" || name == "lattice") return rook_graph(ints(1, 1)[0]);
  if (name == "triangular") return triangular_graph(ints(1, 1)[0]);
  if (name == "kneser") {
    auto v = ints(1, 2);
    return kneser_graph(v[0], v.size() > 1 ? v[1] : 2);
  }
  if (name == "paley") return paley_graph(ints(1, 1)[0]);
  if (name == "hypercube") return hypercube_graph(ints(1, 1)[0]);
  if (name == "petersen") {
    ints(0, 0);
    return kneser_graph(5, 2);
  }
  if (name == "pentagon") {
    ints(0, 0);
    return cycle_graph(5);
  }
  if (name == "clebsch-complement") {
    ints(0, 0);
    return complement(*find_embedded("clebsch"));
  }
  if (const Graph* g = find_embedded(name)) {
    ints(0, 0);
    return *g;
  }
  throw InputError("unknown graph family '" + name + "'");
}

/// Named graphs used as the standard test catalog, all with n <= 30.
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "pentagon",    "petersen",           "rook(3)",  "rook(4)",  "triangular(5)",          "triangular(6)",
      "complement(triangular(6))",         "shrikhande", "clebsch", "clebsch-complement",    "schlafli",
      "schlafli-complement",               "chang1",   "chang2",   "chang3",                 "paley(13)",
      "paley(17)",   "cycle(6)",           "complete-multipartite(2,2,2)",                   "icosahedron",
      "complement(icosahedron)",           "hypercube(3)"};
  return names;
}

}  // namespace hoffman
