#pragma once

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hoffman/error.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/quadratic.hpp"
#include "hoffman/regularity.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

/// h(G) = 1 - λmax/λmin; `exact` is set whenever the extreme eigenvalues are
/// known exactly (strongly regular, complete).
struct HoffmanNumber {
  double value = 0.0;
  std::optional<QuadraticNumber> exact;

  bool is_integral(double eps = 1e-9) const {
    if (exact) return exact->is_integer();
    return std::abs(value - std::round(value)) <= eps;
  }
  int rounded() const { return static_cast<int>(std::lround(value)); }
};

inline HoffmanNumber hoffman_number(const ExtremeEigenvalues& ev) {
  if (ev.min >= 0.0 || (ev.exact_min && ev.exact_min->sign() >= 0))
    throw DomainError("Hoffman number undefined: graph has no edges");
  HoffmanNumber h;
  if (ev.exact_max && ev.exact_min) {
    h.exact = QuadraticNumber(1) - *ev.exact_max / *ev.exact_min;
    h.value = h.exact->value();
  } else {
    h.value = 1.0 - ev.max / ev.min;
  }
  return h;
}

inline HoffmanNumber hoffman_number(const Graph& g, double tol = kDefaultSpectralTol) {
  if (g.is_empty()) throw DomainError("Hoffman number undefined: graph has no edges");
  return hoffman_number(extreme_eigenvalues(g, tol));
}

enum class GeometricClass { Irrational, RationalNonIntegral, PseudoGeometric };

inline std::string to_string(GeometricClass c) {
  switch (c) {
    case GeometricClass::Irrational: return "irrational";
    case GeometricClass::RationalNonIntegral: return "rational-non-integral";
    case GeometricClass::PseudoGeometric: return "pseudo-geometric";
  }
  return "?";
}

/// Geometric parameters (s, t, α) of a primitive strongly regular graph.
struct GeometricParams {
  QuadraticNumber s;
  QuadraticNumber t;
  QuadraticNumber alpha;
  GeometricClass classification = GeometricClass::Irrational;

  QuadraticNumber hoffman() const { return s + QuadraticNumber(1); }
  bool integral() const { return s.is_integer() && t.is_integer() && alpha.is_integer(); }
};

inline GeometricClass classify_geometric(const QuadraticNumber& s, const QuadraticNumber& t,
                                         const QuadraticNumber& alpha) {
  if (s.is_integer() && t.is_integer() && alpha.is_integer() && s.sign() > 0 && t.sign() > 0 && alpha.sign() > 0)
    return GeometricClass::PseudoGeometric;
  if (s.is_rational() && t.is_rational() && alpha.is_rational()) return GeometricClass::RationalNonIntegral;
  return GeometricClass::Irrational;
}

/// (s, t, α) = (-k/τ, -τ-1, -k/τ - θ).
inline GeometricParams geometric_params(const QuadraticNumber& k, const QuadraticNumber& theta,
                                        const QuadraticNumber& tau) {
  if (!(tau < QuadraticNumber(-1)) || !(theta > QuadraticNumber(0)))
    throw DomainError("geometric parameters need a primitive SRG (tau < -1, theta > 0); got theta=" + theta.str() +
                      ", tau=" + tau.str());
  GeometricParams g;
  g.s = -k / tau;
  g.t = -tau - QuadraticNumber(1);
  g.alpha = g.s - theta;
  g.classification = classify_geometric(g.s, g.t, g.alpha);
  return g;
}

inline GeometricParams geometric_params(const SrgParams& p) {
  if (!p.primitive()) throw DomainError("geometric parameters need a primitive SRG; " + to_string(p) + " is imprimitive");
  const auto ev = srg_exact_eigenvalues(p);
  return geometric_params(QuadraticNumber(p.k), ev.theta, ev.tau);
}

/// Inverse map: ((s+1)(st+α)/α, s(t+1), s-1+t(α-1), α(t+1)). Throws
/// DomainError when the tuple is not a valid integral parameter set.
inline SrgParams geometric_to_combinatorial(const QuadraticNumber& s, const QuadraticNumber& t,
                                            const QuadraticNumber& alpha) {
  const QuadraticNumber one(1);
  if (s.sign() <= 0 || t.sign() <= 0 || alpha.sign() <= 0)
    throw DomainError("geometric_to_combinatorial: s, t, alpha must be positive");
  const auto n = (s + one) * (s * t + alpha) / alpha;
  const auto k = s * (t + one);
  const auto a = s - one + t * (alpha - one);
  const auto c = alpha * (t + one);
  for (const auto* x : {&n, &k, &a, &c})
    if (!x->is_integer())
      throw DomainError("geometric_to_combinatorial: non-integral parameter " + x->str() + " for (s,t,alpha)=(" +
                        s.str() + "," + t.str() + "," + alpha.str() + ")");
  SrgParams p{static_cast<int>(n.p()), static_cast<int>(k.p()), static_cast<int>(a.p()), static_cast<int>(c.p())};
  if (p.a < 0 || p.c < 0 || p.k >= p.n) throw DomainError("geometric_to_combinatorial: infeasible tuple " + to_string(p));
  return p;
}

inline SrgParams geometric_to_combinatorial(const GeometricParams& g) {
  return geometric_to_combinatorial(g.s, g.t, g.alpha);
}

/// Geometric parameters of the complement: (st/α, s-α, t(s-α)/α).
inline GeometricParams complement_geometric(const GeometricParams& g) {
  if (g.alpha == g.s) throw DomainError("complement_geometric: alpha == s (complement imprimitive)");
  GeometricParams out;
  out.s = g.s * g.t / g.alpha;
  out.t = g.s - g.alpha;
  out.alpha = g.t * (g.s - g.alpha) / g.alpha;
  out.classification = classify_geometric(out.s, out.t, out.alpha);
  return out;
}

/// Average parameters of a regular graph that is neither empty nor complete.
struct AverageParams {
  int n = 0;
  int k = 0;
  Rational a_bar;
  Rational c_bar;
  double tau_bar = 0.0;
  double theta_bar = 0.0;
  double s_bar = 0.0;
};

/// Roots (smaller, larger) of x^2 + b x + c.
inline std::pair<double, double> quadratic_roots(double b, double c) {
  const double disc = std::sqrt(std::max(0.0, b * b - 4.0 * c));
  // stable form: avoid cancellation in the root of smaller magnitude
  const double q = -0.5 * (b + (b >= 0 ? disc : -disc));
  double r1 = q, r2 = q != 0.0 ? c / q : 0.0;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

inline AverageParams average_params(const Graph& g) {
  const int k = g.regular_degree();
  if (k < 0) throw DomainError("average parameters need a regular graph");
  if (g.is_empty() || g.is_complete()) throw DomainError("average parameters need a graph that is neither empty nor complete");
  const auto prof = common_neighbor_profile(g);
  AverageParams out;
  out.n = g.order();
  out.k = k;
  out.a_bar = *prof.a_bar;
  out.c_bar = *prof.c_bar;
  const double a = to_double(out.a_bar), c = to_double(out.c_bar);
  std::tie(out.tau_bar, out.theta_bar) = quadratic_roots(c - a, c - k);
  out.s_bar = -k / out.tau_bar;
  return out;
}

/// Positive root of (n + ā - 2k)x² + (k² - k + ā - ā n)x - k(n-k-1); the
/// linear case is handled when the leading coefficient vanishes.
inline double s_bar_from_edge_data(int n, int k, const Rational& a_bar) {
  const Rational lead = Rational(n - 2 * k) + a_bar;
  const Rational mid = Rational(static_cast<long long>(k) * k - k) + a_bar - a_bar * Rational(n);
  const Rational cst = Rational(-static_cast<long long>(k) * (n - k - 1));
  const double A = to_double(lead), B = to_double(mid), C = to_double(cst);
  if (lead.numerator() == 0) {
    if (mid.numerator() == 0) throw DomainError("s_bar_from_edge_data: degenerate polynomial");
    const double x = -C / B;
    if (!(x > 0)) throw DomainError("s_bar_from_edge_data: no positive root");
    return x;
  }
  const auto [lo, hi] = quadratic_roots(B / A, C / A);
  if (hi > 0 && !(lo > 0)) return hi;
  if (lo > 0 && !(hi > 0)) return lo;
  if (hi > 0 && lo > 0) throw DomainError("s_bar_from_edge_data: two positive roots");
  throw DomainError("s_bar_from_edge_data: no positive root");
}

// ---------------------------------------------------------------------------
// Strongly regular parameter search

struct SrgSearchFilters {
  bool krein = true;
  bool absolute_bound = true;
};

struct SrgCandidate {
  SrgParams params;
  SrgEigenvalues eigen;
  GeometricParams geometric;
  QuadraticNumber hoffman;
};

/// Integrality, nonnegativity, and (optionally) Krein / absolute-bound
/// feasibility of a primitive parameter tuple. Returns the exact eigen data
/// when feasible.
inline std::optional<SrgEigenvalues> srg_feasible(const SrgParams& p, const SrgSearchFilters& filters = {}) {
  if (!p.primitive() || p.k >= p.n - 1 || p.a < 0 || p.a >= p.k || !p.counts_consistent()) return std::nullopt;
  const auto ev = srg_exact_eigenvalues(p);
  const auto& f = ev.theta_multiplicity;
  const auto& g = ev.tau_multiplicity;
  if (!f.is_integer() || !g.is_integer() || f.sign() <= 0 || g.sign() <= 0) return std::nullopt;
  if (!ev.theta.is_rational()) {
    // conference graph: f = g = (n-1)/2
    if (!(f == g)) return std::nullopt;
  } else if (!ev.theta.is_integer() || !ev.tau.is_integer()) {
    return std::nullopt;
  }
  const QuadraticNumber k(p.k), one(1), two(2);
  const auto& th = ev.theta;
  const auto& ta = ev.tau;
  if (filters.krein) {
    // (θ+1)(k+θ+2θτ) <= (k+θ)(τ+1)^2 and (τ+1)(k+τ+2θτ) <= (k+τ)(θ+1)^2
    const auto lhs1 = (th + one) * (k + th + two * th * ta);
    const auto rhs1 = (k + th) * (ta + one) * (ta + one);
    const auto lhs2 = (ta + one) * (k + ta + two * th * ta);
    const auto rhs2 = (k + ta) * (th + one) * (th + one);
    if (lhs1 > rhs1 || lhs2 > rhs2) return std::nullopt;
  }
  if (filters.absolute_bound) {
    const auto fi = f.p(), gi = g.p();
    if (2LL * p.n > fi * (fi + 3) || 2LL * p.n > gi * (gi + 3)) return std::nullopt;
  }
  return ev;
}

/// All feasible primitive (n,k,a,c) with n <= n_max and h <= h_max, sorted.
inline std::vector<SrgCandidate> srg_param_search(int n_max, double h_max, const SrgSearchFilters& filters = {},
                                                  int jobs = 1) {
  if (n_max > 200) throw InputError("srg_param_search: n_max must be <= 200");
  if (!(h_max > 1.0)) throw InputError("srg_param_search: h_max must exceed 1");
  std::vector<SrgCandidate> out;
  std::mutex lock;
  auto scan = [&](int n) {
    std::vector<SrgCandidate> local;
    for (int k = 2; k <= n - 2; ++k)
      for (int a = 0; a < k; ++a)
        for (int c = 1; c < k; ++c) {
          const SrgParams p{n, k, a, c};
          if (!p.counts_consistent()) continue;
          auto ev = srg_feasible(p, filters);
          if (!ev) continue;
          const auto h = QuadraticNumber(1) - QuadraticNumber(k) / ev->tau;
          if (h.value() > h_max + 1e-12) continue;
          local.push_back({p, *ev, geometric_params(QuadraticNumber(k), ev->theta, ev->tau), h});
        }
    std::lock_guard guard(lock);
    out.insert(out.end(), local.begin(), local.end());
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (int n = 2; n <= n_max; ++n) scan(n);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (int n = 2 + w; n <= n_max; n += jobs) scan(n);
      });
    for (auto& t : pool) t.join();
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.params < y.params; });
  return out;
}

}  // namespace hoffman
