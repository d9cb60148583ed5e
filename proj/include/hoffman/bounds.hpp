#pragma once

#include <optional>
#include <string>

#include "hoffman/coloring.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/params.hpp"
#include "hoffman/regularity.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

/// One closed-form bound. `actual` holds the invariant it bounds when that
/// was computed exactly (α, ω, χ, N).
struct BoundEntry {
  bool applicable = false;
  std::string reason;  // why not applicable; empty otherwise
  double value = 0.0;
  std::optional<std::string> exact;
  std::optional<double> actual;
  bool tight = false;  // actual attains the bound (within 1e-7)
};

struct BoundReport {
  int n = 0;
  std::optional<int> k;
  BoundEntry hoffman;         // χ >= h
  BoundEntry ratio;           // α <= n(-λmin)/(k-λmin)
  BoundEntry classic;         // χ >= n/α
  BoundEntry neumaier;        // ω <= s̄+1, edge-regular
  BoundEntry co_edge;         // χ >= s̄+1, co-edge-regular
  BoundEntry triangles;       // N >= ..., Hoffman colorable regular
  BoundEntry product;         // h(G)h(Ḡ) <= n
  double product_slack = 0.0; // n - h(G)h(Ḡ)
};

namespace detail {

inline BoundEntry not_applicable(std::string why) {
  BoundEntry e;
  e.reason = std::move(why);
  return e;
}

inline bool close(double x, double y) { return std::abs(x - y) <= 1e-7; }

}  // namespace detail

/// Triangle lower bound for a Hoffman colorable k-regular graph on n
/// vertices with χ = h colors; exact rational.
inline Rational triangle_lower_bound(int n, int k, int chi) {
  if (chi < 2 || chi >= n) throw DomainError("triangle_lower_bound: need 2 <= chi < n");
  const Rational nk(static_cast<std::int64_t>(k) * n, 6);
  const Rational inner = Rational(chi - 1) + Rational(static_cast<std::int64_t>(k - chi) * (k - chi + 1), n - chi) -
                         Rational(static_cast<std::int64_t>(k) * (n - k - 1),
                                  static_cast<std::int64_t>(n - chi) * (chi - 1));
  return nk * inner;
}

inline BoundReport bound_report(const Graph& g, std::uint64_t budget = kDefaultBudget,
                                double tol = kDefaultSpectralTol) {
  using detail::not_applicable;
  BoundReport r;
  r.n = g.order();
  const int n = g.order();
  const auto cls = classify_regularity(g);
  if (cls.regular()) r.k = *cls.k;

  if (g.is_empty()) {
    const std::string why = "graph has no edges (h undefined)";
    r.hoffman = r.ratio = r.classic = r.neumaier = r.co_edge = r.triangles = r.product = not_applicable(why);
    return r;
  }

  const auto ev = extreme_eigenvalues(g, tol);
  const auto h = hoffman_number(ev);
  const auto chi = chromatic_number(g, budget, tol);
  r.hoffman.applicable = true;
  r.hoffman.value = h.value;
  if (h.exact) r.hoffman.exact = h.exact->str();
  if (chi.exact()) {
    r.hoffman.actual = chi.upper;
    r.hoffman.tight = detail::close(chi.upper, h.value);
  }

  const auto alpha = max_coclique(g, budget);
  if (!cls.regular()) {
    const std::string why = "graph is not regular";
    r.ratio = r.neumaier = r.co_edge = r.triangles = r.product = not_applicable(why);
  } else {
    const int k = *cls.k;
    r.ratio.applicable = true;
    r.ratio.value = n * (-ev.min) / (k - ev.min);
    if (ev.exact_min) r.ratio.exact = (QuadraticNumber(n) * -*ev.exact_min / (QuadraticNumber(k) - *ev.exact_min)).str();
    if (alpha.exact()) {
      r.ratio.actual = alpha.upper;
      r.ratio.tight = detail::close(alpha.upper, r.ratio.value);
    }

    const bool proper = !g.is_complete();
    std::optional<AverageParams> avg;
    if (proper) avg = average_params(g);

    if (!cls.edge_regular()) r.neumaier = not_applicable("graph is not edge-regular");
    else if (!avg) r.neumaier = not_applicable("graph is complete");
    else {
      r.neumaier.applicable = true;
      r.neumaier.value = avg->s_bar + 1.0;
      const auto omega = max_clique(g, budget);
      if (omega.exact()) {
        r.neumaier.actual = omega.upper;
        r.neumaier.tight = detail::close(omega.upper, r.neumaier.value);
      }
    }

    if (!cls.co_edge_regular()) r.co_edge = not_applicable("graph is not co-edge-regular");
    else if (!avg) r.co_edge = not_applicable("graph is complete");
    else {
      r.co_edge.applicable = true;
      r.co_edge.value = avg->s_bar + 1.0;
      if (chi.exact()) {
        r.co_edge.actual = chi.upper;
        r.co_edge.tight = detail::close(chi.upper, r.co_edge.value);
      }
    }

    const auto hc = find_hoffman_coloring(g, budget, tol);
    if (hc.outcome != SearchOutcome::Found) {
      r.triangles = not_applicable(hc.outcome == SearchOutcome::Absent ? "not Hoffman colorable: " + hc.reason
                                                                       : "Hoffman colorability undecided within budget");
    } else if (h.rounded() >= n) {
      r.triangles = not_applicable("graph is complete");
    } else {
      const auto bound = triangle_lower_bound(n, k, h.rounded());
      r.triangles.applicable = true;
      r.triangles.value = to_double(bound);
      r.triangles.exact = to_string(bound);
      r.triangles.actual = static_cast<double>(triangle_count(g));
      r.triangles.tight = detail::close(*r.triangles.actual, r.triangles.value);
    }

    if (!proper) {
      r.product = not_applicable("complement has no edges");
    } else {
      const auto hc_bar = hoffman_number(complement(g), tol);
      r.product.applicable = true;
      r.product.value = h.value * hc_bar.value;
      if (h.exact && hc_bar.exact) {
        try {
          r.product.exact = (*h.exact * *hc_bar.exact).str();
        } catch (const DomainError&) {
          // distinct radicals: leave float only
        }
      }
      r.product_slack = n - r.product.value;
      r.product.actual = n;
      r.product.tight = std::abs(r.product_slack) <= 1e-7;
    }
  }

  if (alpha.exact()) {
    r.classic.applicable = true;
    r.classic.value = static_cast<double>(n) / alpha.upper;
    r.classic.exact = to_string(Rational(n, alpha.upper));
    if (chi.exact()) {
      r.classic.actual = chi.upper;
      r.classic.tight = detail::close(chi.upper, r.classic.value);
    }
  } else {
    r.classic = not_applicable("independence number undecided within budget");
  }
  return r;
}

}  // namespace hoffman
