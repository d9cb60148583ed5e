#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hoffman/vector_coloring.hpp"
#include "hoffman/families.hpp"
#include "oracles.hpp"

using namespace hoffman;

namespace {

ThetaResult theta(const Graph& g, ThetaVariant v = ThetaVariant::Theta, double tol = 1e-6) {
  return lovasz_theta(g, {v, tol});
}

// Known closed form for odd cycles.
double odd_cycle_theta(int n) {
  const double c = std::cos(std::numbers::pi / n);
  return n * c / (1 + c);
}

}  // namespace

TEST(Simplex, InnerProducts) {
  for (int c = 2; c <= 20; ++c) {
    const Matrix s = regular_simplex(c);
    ASSERT_EQ(s.rows(), c);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) {
        double ip = 0;
        for (int d = 0; d < s.cols(); ++d) ip += s(i, d) * s(j, d);
        EXPECT_NEAR(ip, i == j ? 1.0 : -1.0 / (c - 1), 1e-12) << c;
      }
  }
  EXPECT_THROW(regular_simplex(1), InputError);
}

TEST(Simplex, FromColoringIsStrict) {
  const auto g = named_graph("petersen");
  const auto chi = chromatic_number(g);
  const auto vc = simplex_vector_coloring(chi.witness);
  EXPECT_DOUBLE_EQ(vc.t, 3.0);
  const auto r = check_vector_coloring(g, vc);
  EXPECT_TRUE(r.unit);
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.strict);
  EXPECT_LE(r.max_edge_deviation, 1e-12);
}

TEST(Canonical, PetersenShrikhandeSquare) {
  struct Case {
    std::string name;
    double target;
  };
  for (const auto& [name, target] : std::vector<Case>{{"petersen", -2.0 / 3}, {"shrikhande", -1.0 / 3}, {"cycle(4)", -1.0}}) {
    const auto g = named_graph(name);
    const auto vc = canonical_vector_coloring(g);
    const auto r = check_vector_coloring(g, vc);
    EXPECT_TRUE(r.unit) << name;
    EXPECT_TRUE(r.strict) << name;
    EXPECT_NEAR(r.target, target, 1e-9) << name;
    for (auto [u, v] : g.edges()) EXPECT_NEAR(vc.inner(u, v), target, 1e-9) << name;
  }
}

TEST(Canonical, NegatedVectorBreaksValidity) {
  const auto g = named_graph("petersen");
  auto vc = canonical_vector_coloring(g);
  for (int j = 0; j < vc.dimension(); ++j) vc.vectors(0, j) = -vc.vectors(0, j);
  const auto r = check_vector_coloring(g, vc);
  EXPECT_TRUE(r.unit);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.strict);
  ASSERT_TRUE(r.worst_edge.has_value());
  EXPECT_TRUE(r.worst_edge->first == 0 || r.worst_edge->second == 0);
}

TEST(Canonical, StrictAndInjectiveOnCatalogSrgs) {
  for (const auto& name : catalog_names()) {
    const auto g = named_graph(name);
    const auto cls = classify_regularity(g);
    if (!cls.strongly_regular() || cls.primitive != Primitivity::Primitive) continue;
    const auto vc = canonical_vector_coloring(g);
    const auto r = check_vector_coloring(g, vc);
    EXPECT_TRUE(r.strict) << name;
    EXPECT_TRUE(r.locally_injective) << name;
    EXPECT_NEAR(vc.t, hoffman_number(g).value, 1e-7) << name;
    // Gram matrix is positive semidefinite with unit diagonal
    const auto eig = jacobi_eigen(vc.gram());
    EXPECT_GE(eig.values.back(), -1e-9) << name;
  }
}

TEST(Canonical, RequiresWalkRegularity) {
  EXPECT_THROW(canonical_vector_coloring(path_graph(4)), DomainError);
  EXPECT_THROW(canonical_vector_coloring(Graph(4, {{0, 1}, {2, 3}})), InputError);
}

TEST(Canonical, CsvHasOneRowPerVertex) {
  const auto vc = canonical_vector_coloring(cycle_graph(4));
  const auto csv = to_csv(vc);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);  // header plus 4 rows
  EXPECT_EQ(csv.rfind("vertex,x0", 0), 0u);
  EXPECT_NE(csv.find("\n0,"), std::string::npos);
}

TEST(Theta, ClosedForms) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_NEAR(theta(complete_graph(n)).value, 1.0, 1e-5) << n;
    EXPECT_NEAR(theta(empty_graph(n)).value, n, 1e-5) << n;
  }
  EXPECT_NEAR(theta(cycle_graph(5)).value, std::sqrt(5.0), 1e-5);
  for (int n : {7, 9, 11}) EXPECT_NEAR(theta(cycle_graph(n)).value, odd_cycle_theta(n), 1e-5) << n;
  EXPECT_NEAR(theta(named_graph("petersen")).value, 4.0, 1e-5);
  EXPECT_NEAR(theta(paley_graph(13)).value, std::sqrt(13.0), 1e-5);
  EXPECT_NEAR(theta(kneser_graph(7, 3)).value, 15.0, 1e-4);
}

TEST(Theta, BracketContainsValue) {
  for (const char* name : {"pentagon", "petersen", "shrikhande", "icosahedron"}) {
    const auto r = theta(named_graph(name));
    EXPECT_LE(r.lower, r.value + 1e-12) << name;
    EXPECT_LE(r.value, r.upper + 1e-12) << name;
    EXPECT_LE(r.gap, 1e-4) << name;
    EXPECT_GT(r.iterations, 0) << name;
  }
}

// The dual bound is a certified upper bound and the repaired primal a
// certified lower bound, so both ends of the bracket obey the sandwich.
TEST(Theta, SandwichedByIndependenceAndCliqueCover) {
  for (std::uint32_t seed = 0; seed < 12; ++seed) {
    const auto g = oracle::random_graph(9, 0.4, seed + 50);
    const auto r = theta(g);
    EXPECT_GE(r.upper, oracle::alpha(g) - 1e-9);
    EXPECT_LE(r.lower, oracle::chromatic(complement(g)) + 1e-9);
    EXPECT_NEAR(r.value, r.upper, 10 * 1e-6 * std::max(1.0, r.value));
  }
}

TEST(Theta, MonotoneUnderEdgeDeletion) {
  for (std::uint32_t seed = 0; seed < 8; ++seed) {
    const auto g = oracle::random_graph(10 + seed % 3, 0.5, seed + 7);
    auto edges = g.edges();
    if (edges.empty()) continue;
    const double before = theta(g, ThetaVariant::Theta, 1e-5).value;
    edges.erase(edges.begin() + seed % edges.size());
    const double after = theta(Graph(g.order(), edges), ThetaVariant::Theta, 1e-5).value;
    EXPECT_GE(after, before - 1e-3);
  }
}

TEST(Theta, ProductWithComplement) {
  for (std::uint32_t seed = 0; seed < 8; ++seed) {
    const auto g = oracle::random_graph(9, 0.5, seed + 300);
    const double p = theta(g).value * theta(complement(g)).value;
    EXPECT_GE(p, g.order() - 1e-3);
  }
  // vertex-transitive: equality
  const auto pet = named_graph("petersen");
  EXPECT_NEAR(theta(pet).value * theta(complement(pet)).value, 10.0, 1e-4);
}

TEST(Theta, PrimeVariantBelowTheta) {
  for (std::uint32_t seed = 0; seed < 8; ++seed) {
    const auto g = oracle::random_graph(10, 0.45, seed + 900);
    const auto t = theta(g);
    const auto tp = theta(g, ThetaVariant::ThetaPrime);
    EXPECT_LE(tp.lower, t.upper + 1e-9);
    EXPECT_LE(tp.value, t.value + 1e-5);
    EXPECT_GE(tp.upper, oracle::alpha(g) - 1e-9);
  }
  EXPECT_NEAR(theta(complement(named_graph("petersen")), ThetaVariant::ThetaPrime).value, 2.5, 1e-5);
}

TEST(Theta, Errors) {
  EXPECT_THROW(theta(Graph(0, {})), InputError);
  EXPECT_THROW(theta(cycle_graph(61)), InputError);
  EXPECT_THROW(theta(cycle_graph(5), ThetaVariant::Theta, 1e-3), InputError);
  try {
    lovasz_theta(named_graph("schlafli"), {ThetaVariant::Theta, 1e-8, 30, 10});
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_GT(e.partial().iterations, 0);
    EXPECT_LE(e.partial().lower, e.partial().upper + 1e-9);
  }
}

TEST(Sandwich, Examples) {
  for (const char* name : {"petersen", "shrikhande", "cycle(6)"}) {
    const auto r = sandwich_report(named_graph(name));
    EXPECT_TRUE(r.holds()) << name;
    EXPECT_TRUE(r.chi.exact()) << name;
  }
  const auto p = sandwich_report(named_graph("petersen"));
  EXPECT_NEAR(p.h.value, 2.5, 1e-9);
  EXPECT_NEAR(p.chi_v.value, 2.5, 1e-5);
  EXPECT_NEAR(p.chi_sv.value, 2.5, 1e-5);
  EXPECT_EQ(p.chi.upper, 3);
  const auto s = sandwich_report(named_graph("shrikhande"));
  EXPECT_NEAR(s.chi_v.value, 4.0, 1e-5);
  EXPECT_EQ(s.chi.upper, 4);
}

TEST(Sandwich, Circulants) {
  for (int n = 5; n <= 11; ++n) {
    const auto g = Graph::from_predicate(n, [&](int u, int v) {
      const int d = std::min(v - u, n - (v - u));
      return d == 1 || d == 3;
    });
    if (!g.is_regular()) continue;
    EXPECT_TRUE(sandwich_report(g).holds()) << n;
  }
}

TEST(Witness, FoundOnHoffmanColorableSrgs) {
  for (const char* name : {"shrikhande", "rook(3)", "rook(4)"}) {
    const auto g = named_graph(name);
    const auto w = non_uvc_witness(g);
    ASSERT_TRUE(w.applicable) << name << ": " << w.failed_hypothesis;
    ASSERT_TRUE(w.pair.has_value());
    const auto [u, v] = *w.pair;
    EXPECT_FALSE(g.adjacent(u, v));
    EXPECT_GT(g.common_neighbors(u, v), 0);
    EXPECT_NEAR(w.simplex_gram, 1.0, 1e-12);
    EXPECT_LT(w.canonical_gram, 1.0 - 1e-6);
    EXPECT_EQ(w.hoffman_coloring->assignment[u], w.hoffman_coloring->assignment[v]);
    const auto rs = check_vector_coloring(g, *w.simplex);
    const auto rc = check_vector_coloring(g, *w.canonical);
    EXPECT_TRUE(rs.strict && rc.strict);
    EXPECT_NEAR(w.simplex->t, w.canonical->t, 1e-7);
    EXPECT_FALSE(rs.locally_injective);
    EXPECT_TRUE(rc.locally_injective);
  }
}

TEST(Witness, InapplicableCases) {
  EXPECT_FALSE(non_uvc_witness(named_graph("petersen")).applicable);
  EXPECT_NE(non_uvc_witness(named_graph("petersen")).failed_hypothesis.find("not Hoffman colorable"),
            std::string::npos);
  EXPECT_NE(non_uvc_witness(cycle_graph(6)).failed_hypothesis.find("trivially"), std::string::npos);
  EXPECT_NE(non_uvc_witness(named_graph("icosahedron")).failed_hypothesis.find("not Hoffman colorable"),
            std::string::npos);
  const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_NE(non_uvc_witness(prism).failed_hypothesis.find("2-walk-regular"), std::string::npos);
  EXPECT_NE(non_uvc_witness(Graph(4, {{0, 1}, {2, 3}})).failed_hypothesis.find("connected"), std::string::npos);
}
