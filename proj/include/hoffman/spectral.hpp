#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hoffman/error.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/linalg.hpp"
#include "hoffman/quadratic.hpp"
#include "hoffman/regularity.hpp"

namespace hoffman {

inline constexpr double kDefaultSpectralTol = 1e-7;

inline Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

/// A run of (numerically) equal eigenvalues.
struct EigenGroup {
  double value;      // mean of the run
  int multiplicity;
  int first;         // index of the first member in Spectrum::eigenvalues
};

/// Adjacency spectrum: eigenvalues descending (with repetition) and an
/// orthonormal eigenvector basis, column j belonging to eigenvalue j.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
  double tol = kDefaultSpectralTol;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  double lambda_max() const { return eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.back(); }

  /// Consecutive eigenvalues closer than tol are grouped together.
  std::vector<EigenGroup> groups() const {
    std::vector<EigenGroup> out;
    for (int i = 0; i < size(); ++i) {
      if (!out.empty() && eigenvalues[i - 1] - eigenvalues[i] <= tol) {
        auto& g = out.back();
        g.value = (g.value * g.multiplicity + eigenvalues[i]) / (g.multiplicity + 1);
        ++g.multiplicity;
      } else {
        out.push_back({eigenvalues[i], 1, i});
      }
    }
    return out;
  }
};

inline void check_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-4)) throw InputError("spectral tolerance must lie in (0, 1e-4]");
}

inline Spectrum spectrum(const Graph& g, double tol = kDefaultSpectralTol) {
  check_tol(tol);
  if (g.order() < 1) throw InputError("spectrum: graph has no vertices");
  auto eig = jacobi_eigen(adjacency_matrix(g));
  return Spectrum{std::move(eig.values), std::move(eig.vectors), tol};
}

/// Exact restricted eigenvalues theta > tau of a non-complete SRG, roots of
/// x^2 + (c-a)x + (c-k), with their multiplicities.
struct SrgEigenvalues {
  QuadraticNumber theta;
  QuadraticNumber tau;
  QuadraticNumber theta_multiplicity;
  QuadraticNumber tau_multiplicity;
};

inline SrgEigenvalues srg_exact_eigenvalues(const SrgParams& p) {
  if (p.n < 2 || p.k < 1 || p.k > p.n - 1 || p.a < 0 || p.c < 0 || p.a >= p.k || p.c > p.k)
    throw DomainError("srg_exact_eigenvalues: parameters out of range " + to_string(p));
  if (!p.counts_consistent()) throw DomainError("srg_exact_eigenvalues: c(n-k-1) != k(k-a-1) for " + to_string(p));
  const long long disc = static_cast<long long>(p.a - p.c) * (p.a - p.c) + 4LL * (p.k - p.c);
  const auto root = QuadraticNumber::sqrt(disc);
  const QuadraticNumber half = Rational(1, 2);
  const QuadraticNumber b = p.a - p.c;
  SrgEigenvalues out;
  out.theta = (b + root) * half;
  out.tau = (b - root) * half;
  // f, g = ((n-1) -+ (2k + (n-1)(a-c)) / sqrt(D)) / 2
  const QuadraticNumber num = 2 * p.k + (p.n - 1) * (p.a - p.c);
  const QuadraticNumber skew = num / root;
  out.theta_multiplicity = (QuadraticNumber(p.n - 1) - skew) * half;
  out.tau_multiplicity = (QuadraticNumber(p.n - 1) + skew) * half;
  return out;
}

struct ComplementEigenvalues {
  QuadraticNumber theta;
  QuadraticNumber tau;
  QuadraticNumber k;
};

/// Eigenvalues of the complement of a non-complete SRG: k̄ = n-k-1,
/// θ̄ = -1-τ, τ̄ = -1-θ.
inline ComplementEigenvalues complement_exact_eigenvalues(const QuadraticNumber& theta, const QuadraticNumber& tau,
                                                          int n, int k) {
  return {QuadraticNumber(-1) - tau, QuadraticNumber(-1) - theta, QuadraticNumber(n - k - 1)};
}

/// Largest and smallest adjacency eigenvalue, exact when the graph is
/// strongly regular.
struct ExtremeEigenvalues {
  double max = 0.0;
  double min = 0.0;
  std::optional<QuadraticNumber> exact_max;
  std::optional<QuadraticNumber> exact_min;
};

inline ExtremeEigenvalues extreme_eigenvalues(const Graph& g, double tol = kDefaultSpectralTol) {
  const auto cls = classify_regularity(g);
  if (auto p = cls.srg(g.order())) {
    const auto ev = srg_exact_eigenvalues(*p);
    ExtremeEigenvalues out;
    out.exact_max = QuadraticNumber(p->k);
    out.exact_min = ev.tau;
    out.max = out.exact_max->value();
    out.min = out.exact_min->value();
    return out;
  }
  if (g.order() == 0) throw InputError("extreme_eigenvalues: graph has no vertices");
  const auto s = spectrum(g, tol);
  ExtremeEigenvalues out{s.lambda_max(), s.lambda_min(), std::nullopt, std::nullopt};
  if (g.is_empty()) {
    out.exact_max = QuadraticNumber(0);
    out.exact_min = QuadraticNumber(0);
  } else if (g.is_complete()) {
    out.exact_max = QuadraticNumber(g.order() - 1);
    out.exact_min = QuadraticNumber(-1);
  }
  if (out.exact_max) {
    out.max = out.exact_max->value();
    out.min = out.exact_min->value();
  }
  return out;
}

/// Orthogonal projector onto one eigenspace.
struct Eigenprojector {
  double value;
  int multiplicity;
  Matrix projector;  // n x n, symmetric idempotent
  Matrix basis;      // n x multiplicity, orthonormal columns
};

inline std::vector<Eigenprojector> eigenprojectors(const Spectrum& s) {
  const int n = s.size();
  std::vector<Eigenprojector> out;
  for (const auto& grp : s.groups()) {
    Matrix basis(n, grp.multiplicity);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < grp.multiplicity; ++j) basis(i, j) = s.eigenvectors(i, grp.first + j);
    Matrix e = basis * basis.transpose();
    out.push_back({grp.value, grp.multiplicity, std::move(e), std::move(basis)});
  }
  return out;
}

enum class WalkRegularity { None = -1, Level0 = 0, Level1 = 1, Level2 = 2 };

inline int to_int(WalkRegularity w) { return static_cast<int>(w); }

inline std::string to_string(WalkRegularity w) {
  return w == WalkRegularity::None ? "none" : std::to_string(to_int(w));
}

/// Largest l in {0, 1, 2} such that every eigenprojector is constant (within
/// tol) on vertex pairs at each distance d <= l. Constancy of projector
/// entries by distance is equivalent to constancy of all walk counts.
inline WalkRegularity walk_regularity_level(const Graph& g, double tol = kDefaultSpectralTol) {
  if (!is_connected(g)) throw InputError("walk_regularity_level: graph must be connected");
  const int n = g.order();
  const auto dist = distance_matrix(g);
  const auto projectors = eigenprojectors(spectrum(g, tol));
  int level = -1;
  for (int d = 0; d <= 2; ++d) {
    bool constant = true;
    for (const auto& p : projectors) {
      std::optional<double> ref;
      for (int u = 0; u < n && constant; ++u)
        for (int v = 0; v < n; ++v) {
          if (dist[static_cast<std::size_t>(u) * n + v] != d) continue;
          const double x = p.projector(u, v);
          if (!ref) ref = x;
          else if (std::abs(x - *ref) > tol) {
            constant = false;
            break;
          }
        }
      if (!constant) break;
    }
    if (!constant) break;
    level = d;
  }
  return static_cast<WalkRegularity>(level);
}

}  // namespace hoffman
