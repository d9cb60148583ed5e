#include <gtest/gtest.h>

#include "hoffman/families.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/graph6.hpp"
#include "hoffman/regularity.hpp"
#include "oracles.hpp"

using namespace hoffman;

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
}

TEST(Graph, DegreeSumIsTwiceEdgeCount) {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    const auto g = oracle::random_graph(12, 0.4, seed);
    long long sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.size());
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  }
}

TEST(Graph6, Triangle) {
  const auto g = parse_graph6("Bw");
  EXPECT_EQ(g.order(), 3);
  EXPECT_TRUE(g.is_complete());
}

TEST(Graph6, CompleteK4) {
  const auto g = parse_graph6("C~");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
}

TEST(Graph6, SingleVertex) {
  const auto g = parse_graph6("@");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0);
}

TEST(Graph6, HandEncodedPath) {
  // P3 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 = 40, +63 = 'g'
  const auto g = parse_graph6("Bg");
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_EQ(to_graph6(g), "Bg");
}

TEST(Graph6, HeaderPrefixAccepted) { EXPECT_EQ(parse_graph6(">>graph6<<Bw").size(), 3); }

TEST(Graph6, Malformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);        // missing data byte
  EXPECT_THROW(parse_graph6("Bww"), ParseError);      // trailing byte
  EXPECT_THROW(parse_graph6("Bx"), ParseError);       // nonzero padding bit
  EXPECT_THROW(parse_graph6("B\x20"), ParseError);    // byte below 63
  EXPECT_THROW(parse_graph6("~?@~"), InputError);     // n > 62 header
}

TEST(Graph6, RoundTripRandom) {
  for (int n = 1; n <= 40; n += 3)
    for (std::uint32_t seed = 0; seed < 5; ++seed) {
      const auto g = oracle::random_graph(n, 0.5, seed * 100 + n);
      const auto s = to_graph6(g);
      EXPECT_EQ(parse_graph6(s), g);
      EXPECT_EQ(to_graph6(parse_graph6(s)), s);
    }
}

TEST(Graph6, RoundTripCatalog) {
  for (const auto& e : embedded_graphs()) EXPECT_EQ(to_graph6(parse_graph6(e.graph6)), e.graph6) << e.name;
}

TEST(EdgeList, ParsesWithComments) {
  const auto g = parse_edge_list("4\n0 1\n1 2 # middle\n2 3\n");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(looks_like_edge_list("4\n0 1\n"));
  EXPECT_FALSE(looks_like_edge_list("C~"));
  EXPECT_THROW(parse_edge_list("3\n0 5\n"), InputError);
}

TEST(Complement, Examples) {
  const auto c5 = cycle_graph(5);
  const auto cc = complement(c5);
  EXPECT_EQ(classify_regularity(cc).srg(5), (SrgParams{5, 2, 0, 1}));
  EXPECT_TRUE(complement(complete_graph(4)).is_empty());
  const auto cp = classify_regularity(complement(named_graph("petersen")));
  EXPECT_EQ(cp.srg(10), (SrgParams{10, 6, 3, 4}));
}

TEST(Complement, RulesOnAllSmallGraphs) {
  for (int n = 2; n <= 7; ++n)
    oracle::all_graphs(n, [&](const Graph& g) {
      const Graph co = complement(g);
      ASSERT_EQ(complement(co), g);
      ASSERT_EQ(g.size() + co.size(), n * (n - 1) / 2);
      const auto c = classify_regularity(g);
      const auto d = classify_regularity(co);
      if (!c.regular()) {
        ASSERT_FALSE(d.regular());
        return;
      }
      ASSERT_EQ(*d.k, n - 1 - *c.k);
      const int k = *c.k;
      // edge-regularity of g is co-edge-regularity of the complement
      if (c.edge_regular()) {
        ASSERT_TRUE(d.co_edge_regular() || co.is_complete());
        if (d.c) {
          ASSERT_EQ(*d.c, n - 2 * k + *c.a);
        }
      }
      if (c.co_edge_regular()) {
        ASSERT_TRUE(d.edge_regular() || co.is_empty());
        if (d.a) {
          ASSERT_EQ(*d.a, n - 2 * k + *c.c - 2);
        }
      }
      if (auto p = c.srg(n)) {
        ASSERT_EQ(d.srg(n), p->complement());
      }
    });
}

TEST(Classify, Petersen) {
  const auto c = classify_regularity(named_graph("petersen"));
  EXPECT_EQ(c.kind, RegularityKind::StronglyRegular);
  EXPECT_EQ(c.srg(10), (SrgParams{10, 3, 0, 1}));
  EXPECT_EQ(c.primitive, Primitivity::Primitive);
}

TEST(Classify, HexagonIsOnlyEdgeRegular) {
  const auto c = classify_regularity(cycle_graph(6));
  EXPECT_EQ(c.kind, RegularityKind::EdgeRegular);
  EXPECT_EQ(*c.k, 2);
  EXPECT_EQ(*c.a, 0);
  EXPECT_FALSE(c.c.has_value());
}

TEST(Classify, PathIsIrregular) { EXPECT_EQ(classify_regularity(path_graph(3)).kind, RegularityKind::Irregular); }

TEST(Classify, ImprimitiveSrg) {
  const auto c = classify_regularity(complete_multipartite_graph({3, 3}));
  EXPECT_EQ(c.kind, RegularityKind::StronglyRegular);
  EXPECT_EQ(c.primitive, Primitivity::Imprimitive);
}

TEST(Classify, CompleteAndEmptyAreNotStronglyRegular) {
  EXPECT_NE(classify_regularity(complete_graph(5)).kind, RegularityKind::StronglyRegular);
  EXPECT_NE(classify_regularity(empty_graph(5)).kind, RegularityKind::StronglyRegular);
}

TEST(Classify, AgreesWithOracleAndDoubleCounting) {
  for (int n = 3; n <= 6; ++n)
    oracle::all_graphs(n, [&](const Graph& g) {
      const auto o = oracle::srg(g);
      const auto c = classify_regularity(g);
      ASSERT_EQ(c.strongly_regular(), o.k >= 0) << to_graph6(g);
      if (auto p = c.srg(n)) {
        ASSERT_EQ(*c.k, o.k);
        ASSERT_EQ(*c.a, o.a);
        ASSERT_EQ(*c.c, o.c);
        ASSERT_TRUE(p->counts_consistent());
      }
    });
}

TEST(Classify, IcosahedronComplementIsCoEdgeRegular) {
  const auto ico = classify_regularity(named_graph("icosahedron"));
  EXPECT_EQ(ico.kind, RegularityKind::EdgeRegular);
  const auto co = classify_regularity(named_graph("complement(icosahedron)"));
  EXPECT_EQ(co.kind, RegularityKind::CoEdgeRegular);
  EXPECT_EQ(*co.k, 6);
  EXPECT_EQ(*co.c, 4);
}

TEST(Named, Families) {
  EXPECT_EQ(classify_regularity(rook_graph(3)).srg(9), (SrgParams{9, 4, 1, 2}));
  EXPECT_EQ(classify_regularity(triangular_graph(6)).srg(15), (SrgParams{15, 8, 4, 4}));
  EXPECT_EQ(paley_graph(5), cycle_graph(5));
  EXPECT_EQ(classify_regularity(paley_graph(13)).srg(13), (SrgParams{13, 6, 2, 3}));
  EXPECT_EQ(hypercube_graph(3).size(), 12);
  EXPECT_EQ(named_graph("kneser(5,2)"), named_graph("petersen"));
  EXPECT_EQ(named_graph("complete_multipartite(2,2,2)").size(), 12);
}

TEST(Named, Errors) {
  EXPECT_THROW(named_graph("nosuch"), InputError);
  EXPECT_THROW(named_graph("paley(7)"), InputError);
  EXPECT_THROW(named_graph("cycle(2)"), InputError);
  EXPECT_THROW(named_graph("cycle(x)"), InputError);
  EXPECT_THROW(named_graph("cycle(5"), InputError);
}

TEST(Named, EmbeddedCatalogParameters) {
  const std::vector<std::pair<std::string, SrgParams>> expected{
      {"shrikhande", {16, 6, 2, 2}}, {"clebsch", {16, 5, 0, 2}},   {"clebsch-complement", {16, 10, 6, 6}},
      {"schlafli", {27, 16, 10, 8}}, {"schlafli-complement", {27, 10, 1, 5}}, {"chang1", {28, 12, 6, 4}},
      {"chang2", {28, 12, 6, 4}},    {"chang3", {28, 12, 6, 4}}};
  for (const auto& [name, p] : expected) {
    const auto g = named_graph(name);
    const auto o = oracle::srg(g);
    EXPECT_EQ((SrgParams{g.order(), o.k, o.a, o.c}), p) << name;
  }
  // same parameters as T(8), but no 7-clique
  EXPECT_EQ(oracle::omega(triangular_graph(8)), 7);
  for (const char* name : {"chang1", "chang2", "chang3"}) EXPECT_LT(oracle::omega(named_graph(name)), 7) << name;
}

TEST(Named, CorruptCatalogEntryDetected) {
  EmbeddedGraph bad{"bad", "", "Bw", RegularityKind::StronglyRegular, 2, 0, 1};
  EXPECT_THROW(load_embedded(bad), CatalogError);
}

TEST(CommonNeighbors, Examples) {
  const auto c6 = common_neighbor_profile(cycle_graph(6));
  EXPECT_EQ(*c6.a_bar, Rational(0));
  EXPECT_EQ(*c6.c_bar, Rational(2, 3));
  EXPECT_EQ(c6.nonadjacent_counts.at(1), 6);
  EXPECT_EQ(c6.nonadjacent_counts.at(0), 3);
  const auto p = common_neighbor_profile(named_graph("petersen"));
  EXPECT_EQ(*p.a_bar, Rational(0));
  EXPECT_EQ(*p.c_bar, Rational(1));
  const auto k4 = common_neighbor_profile(complete_graph(4));
  EXPECT_EQ(*k4.a_bar, Rational(2));
  EXPECT_FALSE(k4.c_bar.has_value());
  EXPECT_FALSE(common_neighbor_profile(empty_graph(3)).a_bar.has_value());
}

TEST(Graph, TrianglesAndDistancesMatchOracle) {
  for (std::uint32_t seed = 0; seed < 15; ++seed) {
    const auto g = oracle::random_graph(11, 0.35, seed);
    EXPECT_EQ(triangle_count(g), oracle::triangles(g));
    const auto d = distance_matrix(g);
    const auto a = oracle::dense(g);
    for (int u = 0; u < 11; ++u)
      for (int v = 0; v < 11; ++v) EXPECT_EQ(d[u * 11 + v] == 1, a[u][v] == 1);
  }
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  EXPECT_FALSE(is_connected(empty_graph(2)));
}
