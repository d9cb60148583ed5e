#pragma once

#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hoffman/coloring.hpp"
#include "hoffman/error.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/linalg.hpp"
#include "hoffman/params.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

inline constexpr double kVectorTol = 1e-7;
inline constexpr double kInjectivityTol = 1e-6;

/// One unit vector per vertex (rows of `vectors`), aiming at value t: edge
/// inner products at most -1/(t-1); strict when they all equal it.
struct VectorColoring {
  Matrix vectors;  // n x d
  double t = 2.0;
  bool strict = false;
  double tol = kVectorTol;

  int order() const { return vectors.rows(); }
  int dimension() const { return vectors.cols(); }
  double inner(Vertex u, Vertex v) const {
    double s = 0.0;
    for (int j = 0; j < dimension(); ++j) s += vectors(u, j) * vectors(v, j);
    return s;
  }
  double distance(Vertex u, Vertex v) const {
    double s = 0.0;
    for (int j = 0; j < dimension(); ++j) s += (vectors(u, j) - vectors(v, j)) * (vectors(u, j) - vectors(v, j));
    return std::sqrt(s);
  }
  Matrix gram() const { return vectors * vectors.transpose(); }
};

/// "vertex,x0,x1,..." per line.
inline std::string to_csv(const VectorColoring& vc) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "vertex";
  for (int j = 0; j < vc.dimension(); ++j) os << ",x" << j;
  os << "\n";
  for (Vertex v = 0; v < vc.order(); ++v) {
    os << v;
    for (int j = 0; j < vc.dimension(); ++j) os << "," << vc.vectors(v, j);
    os << "\n";
  }
  return os.str();
}

/// The c vertices of a regular simplex centred at the origin, as unit
/// vectors in R^{c-1} (rows). Built from e_i - 1/c in a Helmert basis of
/// the sum-zero hyperplane.
inline Matrix regular_simplex(int c) {
  if (c < 2) throw InputError("regular_simplex needs at least 2 vertices");
  Matrix out(c, c - 1);
  const double scale = std::sqrt(static_cast<double>(c) / (c - 1));
  for (int i = 0; i < c; ++i)
    for (int j = 1; j < c; ++j) {
      // Helmert vector h_j = (1,...,1,-j,0,...)/sqrt(j(j+1)) with j ones
      const double norm = std::sqrt(static_cast<double>(j) * (j + 1));
      const double hij = i < j ? 1.0 / norm : i == j ? -static_cast<double>(j) / norm : 0.0;
      // <e_i - 1/c, h_j> = h_ij since h_j sums to zero
      out(i, j - 1) = scale * hij;
    }
  return out;
}

inline VectorColoring simplex_vector_coloring(const Coloring& col) {
  if (col.num_classes < 2) throw InputError("simplex_vector_coloring needs at least 2 classes");
  const Matrix simplex = regular_simplex(col.num_classes);
  VectorColoring vc;
  const int n = static_cast<int>(col.assignment.size());
  vc.vectors = Matrix(n, col.num_classes - 1);
  for (Vertex v = 0; v < n; ++v)
    for (int j = 0; j < col.num_classes - 1; ++j) vc.vectors(v, j) = simplex(col.assignment[v], j);
  vc.t = col.num_classes;
  vc.strict = true;
  return vc;
}

struct VectorColoringReport {
  bool unit = false;
  bool valid = false;
  bool strict = false;
  bool locally_injective = false;
  double target = 0.0;               // -1/(t-1)
  double max_edge_excess = 0.0;      // max over edges of <u,v> - target
  double max_edge_deviation = 0.0;   // max over edges of |<u,v> - target|
  std::optional<Edge> worst_edge;
  std::optional<Edge> collision;     // distance-2 pair sharing a vector
};

inline VectorColoringReport check_vector_coloring(const Graph& g, const VectorColoring& vc) {
  if (vc.order() != g.order()) throw InputError("check_vector_coloring: vector count does not match the graph");
  VectorColoringReport out;
  out.target = -1.0 / (vc.t - 1.0);
  out.unit = true;
  for (Vertex v = 0; v < g.order(); ++v)
    if (std::abs(vc.inner(v, v) - 1.0) > vc.tol) out.unit = false;
  double worst = -std::numeric_limits<double>::infinity();
  for (auto [u, v] : g.edges()) {
    const double diff = vc.inner(u, v) - out.target;
    out.max_edge_deviation = std::max(out.max_edge_deviation, std::abs(diff));
    if (diff > worst) {
      worst = diff;
      out.worst_edge = Edge{u, v};
    }
  }
  out.max_edge_excess = g.size() == 0 ? 0.0 : worst;
  out.valid = out.unit && out.max_edge_excess <= vc.tol;
  out.strict = out.valid && out.max_edge_deviation <= vc.tol;
  out.locally_injective = true;
  const auto dist = distance_matrix(g);
  const int n = g.order();
  for (Vertex u = 0; u < n && out.locally_injective; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (dist[static_cast<std::size_t>(u) * n + v] == 2 && vc.distance(u, v) <= kInjectivityTol) {
        out.locally_injective = false;
        out.collision = Edge{u, v};
        break;
      }
  return out;
}

/// Rows of the λmin-eigenspace basis, normalized. For 1-walk-regular graphs
/// this is a strict vector h-coloring.
inline VectorColoring canonical_vector_coloring(const Graph& g, double tol = kDefaultSpectralTol) {
  if (!is_connected(g)) throw InputError("canonical_vector_coloring: graph must be connected");
  if (g.is_empty()) throw DomainError("canonical_vector_coloring: graph has no edges");
  const auto level = walk_regularity_level(g, tol);
  if (to_int(level) < 1) throw DomainError("canonical_vector_coloring: graph is not 1-walk-regular");
  const auto s = spectrum(g, tol);
  const auto projectors = eigenprojectors(s);
  const auto& bottom = projectors.back();
  VectorColoring vc;
  const int n = g.order();
  const int d = bottom.multiplicity;
  vc.vectors = Matrix(n, d);
  for (Vertex v = 0; v < n; ++v) {
    double norm = 0.0;
    for (int j = 0; j < d; ++j) norm += bottom.basis(v, j) * bottom.basis(v, j);
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw DomainError("canonical_vector_coloring: zero projector row at vertex " + std::to_string(v));
    for (int j = 0; j < d; ++j) vc.vectors(v, j) = bottom.basis(v, j) / norm;
  }
  vc.t = 1.0 - s.lambda_max() / bottom.value;
  vc.strict = check_vector_coloring(g, vc).strict;
  return vc;
}

// ---------------------------------------------------------------------------
// Lovász theta by an ADMM on the dual SDP

enum class ThetaVariant { Theta, ThetaPrime };

inline std::string to_string(ThetaVariant v) { return v == ThetaVariant::Theta ? "theta" : "theta-prime"; }

struct ThetaOptions {
  ThetaVariant variant = ThetaVariant::Theta;
  double tol = 1e-6;
  int max_iterations = 50'000;
  int check_every = 25;
};

struct ThetaResult {
  double value = 0.0;        // midpoint of [lower, upper]
  double lower = 0.0;        // objective of a repaired feasible primal point
  double upper = 0.0;        // dual bound λmax(J + Y)
  double gap = 0.0;          // upper - lower
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  Matrix primal;             // X
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, ThetaResult partial) : std::runtime_error(what), partial_(std::move(partial)) {}
  const ThetaResult& partial() const { return partial_; }

 private:
  ThetaResult partial_;
};

namespace detail {

inline double psd_project(const Matrix& v, Matrix& basis, Matrix& out) {
  auto eig = basis.rows() == v.rows() ? jacobi_eigen_warm(v, basis, {1e-300, 1e-14, 100}) : jacobi_eigen(v);
  basis = eig.vectors;
  const int n = v.rows();
  out = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    const double lam = eig.values[j];
    if (lam <= 0.0) break;
    for (int a = 0; a < n; ++a) {
      const double va = lam * eig.vectors(a, j);
      if (va == 0.0) continue;
      for (int b = 0; b < n; ++b) out(a, b) += va * eig.vectors(b, j);
    }
  }
  return eig.values.empty() ? 0.0 : eig.values.front();
}

inline double lambda_max(const Matrix& m) { return jacobi_eigen(m).values.front(); }
inline double lambda_min(const Matrix& m) { return jacobi_eigen(m).values.back(); }

}  // namespace detail

/// ϑ(G) = max <J, X> s.t. tr X = 1, X_uv = 0 on edges, X ⪰ 0; ϑ' adds
/// X >= 0 entrywise. The returned [lower, upper] bracket is rigorous up to
/// floating-point eigenvalue error: lower comes from a repaired feasible X,
/// upper from the dual certificate.
inline ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& opt = {}) {
  const int n = g.order();
  if (n < 1 || n > 60) throw InputError("lovasz_theta: supports 1 <= n <= 60");
  if (!(opt.tol >= 1e-8 && opt.tol <= 1e-4)) throw InputError("lovasz_theta: tol must lie in [1e-8, 1e-4]");
  const bool nonneg = opt.variant == ThetaVariant::ThetaPrime;
  const auto edges = g.edges();
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // constraints (orthonormal): tr(X)/sqrt(n) = 1/sqrt(n); sqrt(2) X_uv = 0
  Matrix c(n, n, -1.0);  // minimize <-J, X>
  auto a_of = [&](const Matrix& x, std::vector<double>& out) {
    out.assign(edges.size() + 1, 0.0);
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += x(i, i);
    out[0] = tr / sqrt_n;
    for (std::size_t e = 0; e < edges.size(); ++e) out[e + 1] = std::sqrt(2.0) * x(edges[e].first, edges[e].second);
  };
  auto a_adj = [&](const std::vector<double>& y, bool with_trace) {
    Matrix m(n, n);
    if (with_trace)
      for (int i = 0; i < n; ++i) m(i, i) = y[0] / sqrt_n;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      m(u, v) = m(v, u) = y[e + 1] * inv_sqrt2;
    }
    return m;
  };
  std::vector<double> b(edges.size() + 1, 0.0);
  b[0] = 1.0 / sqrt_n;

  Matrix x = (1.0 / n) * Matrix::identity(n);
  Matrix s(n, n), z(n, n), basis;
  std::vector<double> y(edges.size() + 1, 0.0), ax;
  double mu = 1.0;
  const double norm_c = c.frobenius();

  ThetaResult res;
  auto bracket = [&]() {
    // dual bound: <J,X> <= λmax(J + Y_edges + Z) for any feasible X
    Matrix m = a_adj(y, false);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) += 1.0 + (nonneg ? z(i, j) : 0.0);
    res.upper = detail::lambda_max(m);
    // primal repair: zero edge entries, clip negatives, shift to PSD, renormalize
    Matrix xf = x;
    for (auto [u, v] : edges) xf(u, v) = xf(v, u) = 0.0;
    if (nonneg)
      for (double& t : xf.data()) t = std::max(t, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) xf(i, j) = xf(j, i) = 0.5 * (xf(i, j) + xf(j, i));
    const double shift = std::max(0.0, -detail::lambda_min(xf));
    double tr = 0.0, obj = 0.0;
    for (int i = 0; i < n; ++i) tr += xf(i, i) + shift;
    for (double t : xf.data()) obj += t;
    obj += shift * n;
    res.lower = tr > 0 ? obj / tr : 0.0;
    res.gap = res.upper - res.lower;
    res.value = 0.5 * (res.lower + res.upper);
  };

  for (int it = 1; it <= opt.max_iterations; ++it) {
    // y-step (A Aᵀ = I)
    a_of(x, ax);
    Matrix sz = s;
    if (nonneg) sz = sz + z;
    std::vector<double> asc;
    a_of(sz - c, asc);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = mu * (b[i] - ax[i]) - asc[i];
    const Matrix aty = a_adj(y, true);
    if (nonneg) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = std::max(0.0, c(i, j) - aty(i, j) - s(i, j) - mu * x(i, j));
    }
    Matrix v = c - aty - mu * x;
    if (nonneg) v = v - z;
    detail::psd_project(v, basis, s);
    x = (1.0 / mu) * (s - v);

    if (it % opt.check_every == 0 || it == opt.max_iterations) {
      a_of(x, ax);
      double pinf = 0.0;
      for (std::size_t i = 0; i < ax.size(); ++i) pinf += (ax[i] - b[i]) * (ax[i] - b[i]);
      pinf = std::sqrt(pinf) / (1.0 + 1.0 / sqrt_n);
      Matrix dres = aty + s - c;
      if (nonneg) dres = dres + z;
      const double dinf = dres.frobenius() / (1.0 + norm_c);
      res.primal_residual = pinf;
      res.dual_residual = dinf;
      res.iterations = it;
      if (pinf <= opt.tol && dinf <= opt.tol) {
        bracket();
        if (res.gap <= 10.0 * opt.tol * std::max(1.0, res.value)) {
          res.primal = x;
          return res;
        }
      }
      // balance primal and dual progress
      if (pinf > 10.0 * dinf) mu = std::min(mu * 1.5, 1e4);
      else if (dinf > 10.0 * pinf) mu = std::max(mu / 1.5, 1e-4);
    }
  }
  bracket();
  res.primal = x;
  throw SolverError("lovasz_theta: no convergence after " + std::to_string(res.iterations) +
                        " iterations (primal residual " + std::to_string(res.primal_residual) + ", dual residual " +
                        std::to_string(res.dual_residual) + ", gap " + std::to_string(res.gap) + ")",
                    res);
}

// ---------------------------------------------------------------------------

/// h <= χ_v = ϑ'(Ḡ) <= χ_sv = ϑ(Ḡ) <= χ.
struct SandwichReport {
  HoffmanNumber h;
  ThetaResult chi_v;
  ThetaResult chi_sv;
  ChromaticResult chi;
  double tol = 0.0;
  bool h_le_chi_v = false;
  bool chi_v_le_chi_sv = false;
  bool chi_sv_le_chi = false;

  bool holds() const { return h_le_chi_v && chi_v_le_chi_sv && chi_sv_le_chi; }
};

inline SandwichReport sandwich_report(const Graph& g, double sdp_tol = 1e-6, std::uint64_t budget = kDefaultBudget) {
  SandwichReport out;
  out.h = hoffman_number(g);
  const Graph co = complement(g);
  out.chi_v = lovasz_theta(co, {ThetaVariant::ThetaPrime, sdp_tol});
  out.chi_sv = lovasz_theta(co, {ThetaVariant::Theta, sdp_tol});
  out.chi = chromatic_number(g, budget);
  out.tol = 10.0 * sdp_tol * std::max(1.0, out.chi_sv.value);
  const double t = out.tol;
  // the last link is checked against χ's proven upper bound
  out.h_le_chi_v = out.h.value <= out.chi_v.value + t;
  out.chi_v_le_chi_sv = out.chi_v.value <= out.chi_sv.value + t;
  out.chi_sv_le_chi = out.chi_sv.value <= out.chi.upper + 3 * t;
  return out;
}

// ---------------------------------------------------------------------------

/// Two optimal strict vector colorings whose Gram matrices differ: the
/// simplex coloring induced by a non-trivial Hoffman coloring (repeats a
/// vector at distance 2) and the locally injective canonical coloring.
struct UvcWitness {
  bool applicable = false;
  std::string failed_hypothesis;
  std::optional<Coloring> hoffman_coloring;
  std::optional<VectorColoring> simplex;
  std::optional<VectorColoring> canonical;
  std::optional<Edge> pair;          // distance-2 pair where the Grams differ
  double simplex_gram = 0.0;         // 1 at `pair`
  double canonical_gram = 0.0;       // < 1 at `pair`
};

inline UvcWitness non_uvc_witness(const Graph& g, std::uint64_t budget = kDefaultBudget,
                                  double tol = kDefaultSpectralTol) {
  UvcWitness out;
  auto fail = [&](std::string why) {
    out.failed_hypothesis = std::move(why);
    return out;
  };
  if (!is_connected(g)) return fail("not connected");
  if (g.is_empty() || !g.is_regular()) return fail("not a regular graph with edges");
  if (walk_regularity_level(g, tol) != WalkRegularity::Level2) return fail("not 2-walk-regular");
  auto hc = find_hoffman_coloring(g, budget, tol);
  if (hc.outcome != SearchOutcome::Found)
    return fail(hc.outcome == SearchOutcome::Inconclusive ? "Hoffman colorability undecided within budget"
                                                          : "not Hoffman colorable (" + hc.reason + ")");
  if (hc.trivial) return fail("only trivially Hoffman colorable (" + hc.reason + ")");

  out.hoffman_coloring = hc.coloring;
  out.simplex = simplex_vector_coloring(*hc.coloring);
  out.canonical = canonical_vector_coloring(g, tol);
  const auto rs = check_vector_coloring(g, *out.simplex);
  const auto rc = check_vector_coloring(g, *out.canonical);
  const double h = hc.certificate->h;
  if (!rs.strict || !rc.strict || std::abs(out.simplex->t - h) > 1e-9 || std::abs(out.canonical->t - h) > 1e-6)
    throw std::logic_error("non_uvc_witness: colorings are not strict at value h");

  const auto dist = distance_matrix(g);
  const int n = g.order();
  for (Vertex u = 0; u < n && !out.pair; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist[static_cast<std::size_t>(u) * n + v] != 2) continue;
      const double gs = out.simplex->inner(u, v);
      const double gc = out.canonical->inner(u, v);
      if (std::abs(gs - 1.0) <= 1e-12 && gc < 1.0 - kInjectivityTol) {
        out.pair = Edge{u, v};
        out.simplex_gram = gs;
        out.canonical_gram = gc;
        break;
      }
    }
  if (!out.pair) return fail("no distance-2 pair separates the Gram matrices");
  out.applicable = true;
  return out;
}

}  // namespace hoffman
