#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hoffman/error.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/params.hpp"
#include "hoffman/regularity.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Vertex partition into color classes 0..num_classes-1.
struct Coloring {
  std::vector<int> assignment;
  int num_classes = 0;

  static Coloring from_assignment(std::vector<int> assignment) {
    Coloring c;
    c.num_classes = assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
    c.assignment = std::move(assignment);
    return c;
  }

  std::vector<std::vector<Vertex>> classes() const {
    std::vector<std::vector<Vertex>> out(num_classes);
    for (Vertex v = 0; v < static_cast<Vertex>(assignment.size()); ++v) out[assignment[v]].push_back(v);
    return out;
  }

  /// Classes indexed 0..num_classes-1, none empty, and no monochromatic edge.
  bool is_proper(const Graph& g) const {
    if (static_cast<int>(assignment.size()) != g.order()) return false;
    std::vector<int> size(num_classes, 0);
    for (int c : assignment) {
      if (c < 0 || c >= num_classes) return false;
      ++size[c];
    }
    if (std::find(size.begin(), size.end(), 0) != size.end()) return false;
    for (auto [u, v] : g.edges())
      if (assignment[u] == assignment[v]) return false;
    return true;
  }
};

enum class SearchOutcome { Found, Absent, Inconclusive };

inline std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Absent: return "absent";
    case SearchOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with greedy-coloring bounds over bitsets.

struct CliqueResult {
  int lower = 0;  // size of the witness
  int upper = 0;  // proven upper bound
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;

  bool exact() const { return lower == upper; }
};

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t budget, int stop_at) : g_(g), budget_(budget), stop_at_(stop_at) {
    const int n = g.order();
    // branch on high-degree vertices first
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && g.adjacent(order_[i], order_[j])) rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  CliqueResult run() {
    const int n = g_.order();
    CliqueResult out;
    if (n == 0) return out;
    std::vector<std::uint64_t> p(words_, 0);
    for (int i = 0; i < n; ++i) p[i / 64] |= std::uint64_t{1} << (i % 64);
    std::vector<int> root_order, root_bound;
    greedy_color(p, root_order, root_bound);
    const int root_upper = root_bound.empty() ? 0 : root_bound.back();
    std::vector<int> current;
    expand(current, p);
    out.nodes = nodes_;
    for (int i : best_) out.witness.push_back(order_[i]);
    std::sort(out.witness.begin(), out.witness.end());
    out.lower = static_cast<int>(best_.size());
    out.upper = aborted_ ? root_upper : out.lower;
    if (stopped_) out.upper = std::max(out.lower, root_upper);
    return out;
  }

  bool stopped() const { return stopped_; }

 private:
  const Graph& g_;
  std::uint64_t budget_;
  int stop_at_;
  std::vector<Vertex> order_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool stopped_ = false;

  static bool any(const std::vector<std::uint64_t>& s) {
    return std::any_of(s.begin(), s.end(), [](std::uint64_t w) { return w != 0; });
  }

  void greedy_color(const std::vector<std::uint64_t>& p, std::vector<int>& order, std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    std::vector<std::uint64_t> uncolored = p;
    int color = 0;
    while (any(uncolored)) {
      ++color;
      std::vector<std::uint64_t> candidates = uncolored;
      while (any(candidates)) {
        std::size_t w = 0;
        while (candidates[w] == 0) ++w;
        const int v = static_cast<int>(w * 64 + std::countr_zero(candidates[w]));
        candidates[w] &= candidates[w] - 1;
        uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        for (std::size_t x = 0; x < words_; ++x) candidates[x] &= ~rows_[v * words_ + x];
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  void expand(std::vector<int>& current, std::vector<std::uint64_t>& p) {
    if (aborted_ || stopped_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<int> order, bound;
    greedy_color(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best_.size())) return;
      const int v = order[i];
      current.push_back(v);
      std::vector<std::uint64_t> next(words_);
      for (std::size_t x = 0; x < words_; ++x) next[x] = p[x] & rows_[v * words_ + x];
      if (!any(next)) {
        if (current.size() > best_.size()) {
          best_ = current;
          if (stop_at_ > 0 && static_cast<int>(best_.size()) >= stop_at_) {
            stopped_ = true;
            return;
          }
        }
      } else {
        expand(current, next);
      }
      current.pop_back();
      if (aborted_ || stopped_) return;
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }
};

}  // namespace detail

/// Exact clique number with a witness. When the node budget runs out the
/// result is an interval [lower, upper].
inline CliqueResult max_clique(const Graph& g, std::uint64_t budget = kDefaultBudget) {
  return detail::CliqueSearch(g, budget, 0).run();
}

/// Independence number via cliques of the complement.
inline CliqueResult max_coclique(const Graph& g, std::uint64_t budget = kDefaultBudget) {
  return max_clique(complement(g), budget);
}

// ---------------------------------------------------------------------------
// Hoffman cocliques and colorings

/// λmin of a regular graph, with the integer -λmin when it is one.
struct RegularSpectralData {
  int k = 0;
  ExtremeEigenvalues eigen;
  HoffmanNumber h;
};

inline RegularSpectralData regular_spectral_data(const Graph& g, double tol = kDefaultSpectralTol) {
  const int k = g.regular_degree();
  if (k < 0) throw InputError("graph must be regular");
  if (g.is_empty()) throw DomainError("Hoffman number undefined: graph has no edges");
  RegularSpectralData out;
  out.k = k;
  out.eigen = extreme_eigenvalues(g, tol);
  out.h = hoffman_number(out.eigen);
  return out;
}

struct CocliqueCheck {
  bool hoffman = false;
  double bound = 0.0;                // n λmin / (λmin - k)
  double required_neighbors = 0.0;   // -λmin
  std::vector<Vertex> violators;     // outside vertices with the wrong count
  std::string reason;
};

inline CocliqueCheck is_hoffman_coclique(const Graph& g, std::span<const Vertex> set,
                                         double tol = kDefaultSpectralTol) {
  if (!is_coclique(g, set)) throw InputError("is_hoffman_coclique: the set is not a coclique");
  const auto data = regular_spectral_data(g, tol);
  const double lmin = data.eigen.min;
  CocliqueCheck out;
  out.bound = g.order() * lmin / (lmin - data.k);
  out.required_neighbors = -lmin;
  std::vector<char> in(g.order(), 0);
  for (Vertex v : set) in[v] = 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    int count = 0;
    for (Vertex w : g.neighbors(v)) count += in[w];
    if (std::abs(count - out.required_neighbors) > 1e-6) out.violators.push_back(v);
  }
  const bool size_ok = std::abs(static_cast<double>(set.size()) - out.bound) <= 1e-6;
  out.hoffman = size_ok && out.violators.empty();
  if (!size_ok) out.reason = "size " + std::to_string(set.size()) + " differs from the ratio bound";
  else if (!out.violators.empty()) out.reason = "outside vertices with a neighbor count other than -lambda_min";
  return out;
}

/// Evidence that a coloring attains the Hoffman bound: equal class sizes
/// n/h and every vertex sees exactly -λmin neighbors in each other class.
struct HoffmanCertificate {
  int h = 0;
  int class_size = 0;
  int cross_degree = 0;                      // -λmin
  std::vector<std::vector<int>> cross_degrees;  // [vertex][class]; own class is 0
  bool trivial = false;
};

struct HoffmanVerification {
  std::optional<HoffmanCertificate> certificate;
  std::string rejection;

  explicit operator bool() const { return certificate.has_value(); }
};

inline HoffmanVerification verify_hoffman_coloring(const Graph& g, const Coloring& col,
                                                   double tol = kDefaultSpectralTol) {
  if (!col.is_proper(g)) throw InputError("verify_hoffman_coloring: coloring is not proper");
  const auto data = regular_spectral_data(g, tol);
  HoffmanVerification out;
  if (!data.h.is_integral()) {
    out.rejection = "Hoffman bound not attainable: h = " + (data.h.exact ? data.h.exact->str() : std::to_string(data.h.value)) +
                    " is not an integer";
    return out;
  }
  const int h = data.h.rounded();
  if (col.num_classes != h) {
    out.rejection = "coloring uses " + std::to_string(col.num_classes) + " colors, Hoffman number is " + std::to_string(h);
    return out;
  }
  HoffmanCertificate cert;
  cert.h = h;
  const double e = -data.eigen.min;
  cert.cross_degree = static_cast<int>(std::lround(e));
  cert.cross_degrees.assign(g.order(), std::vector<int>(h, 0));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) ++cert.cross_degrees[v][col.assignment[w]];
  const auto classes = col.classes();
  cert.class_size = static_cast<int>(classes.front().size());
  for (const auto& cls : classes)
    if (static_cast<int>(cls.size()) * h != g.order()) {
      out.rejection = "class sizes are not all n/h";
      return out;
    }
  if (std::abs(e - cert.cross_degree) > 1e-6) {
    out.rejection = "-lambda_min is not an integer";
    return out;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    for (int c = 0; c < h; ++c)
      if (c != col.assignment[v] && cert.cross_degrees[v][c] != cert.cross_degree) {
        out.rejection = "vertex " + std::to_string(v) + " has " + std::to_string(cert.cross_degrees[v][c]) +
                        " neighbors in class " + std::to_string(c) + ", expected " + std::to_string(cert.cross_degree);
        return out;
      }
  out.certificate = std::move(cert);
  return out;
}

struct HoffmanSearchResult {
  SearchOutcome outcome = SearchOutcome::Inconclusive;
  std::optional<Coloring> coloring;
  std::optional<HoffmanCertificate> certificate;
  std::string reason;
  bool trivial = false;
  std::uint64_t nodes = 0;
};

namespace detail {

// Parts of a regular complete multipartite graph (complement = equal cliques).
inline std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  const Graph co = complement(g);
  std::vector<int> part(g.order(), -1);
  int parts = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (part[v] >= 0) continue;
    auto dist = bfs_distances(co, v);
    std::vector<Vertex> comp;
    for (Vertex w = 0; w < g.order(); ++w)
      if (dist[w] != kUnreachable) comp.push_back(w);
    if (!is_clique(co, comp)) return std::nullopt;
    for (Vertex w : comp) part[w] = parts;
    ++parts;
  }
  return part;
}

class HoffmanColoringSearch {
 public:
  HoffmanColoringSearch(const Graph& g, int h, int e, std::uint64_t budget)
      : g_(g), n_(g.order()), h_(h), e_(e), m_(g.order() / h), budget_(budget) {
    order_ = bfs_order(g, 0);
    color_.assign(n_, -1);
    size_.assign(h_, 0);
    count_.assign(static_cast<std::size_t>(n_) * h_, 0);
  }

  SearchOutcome run() { return place(0, 0) ? SearchOutcome::Found : aborted_ ? SearchOutcome::Inconclusive : SearchOutcome::Absent; }
  const std::vector<int>& colors() const { return color_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const Graph& g_;
  int n_, h_, e_, m_;
  std::uint64_t budget_;
  std::vector<Vertex> order_;
  std::vector<int> color_, size_;
  std::vector<int> count_;  // [vertex * h + class] neighbors already in class
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;

  int& count(Vertex v, int c) { return count_[static_cast<std::size_t>(v) * h_ + c]; }

  bool has_option(Vertex w) {
    for (int c = 0; c < h_; ++c)
      if (size_[c] < m_ && count(w, c) == 0) return true;
    return false;
  }

  bool place(int pos, int used) {
    if (pos == n_) return true;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const Vertex v = order_[pos];
    const int limit = std::min(used + 1, h_);
    for (int c = 0; c < limit; ++c) {
      if (count(v, c) > 0 || size_[c] == m_) continue;
      bool ok = true;
      for (Vertex w : g_.neighbors(v))
        if (count(w, c) >= e_) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[v] = c;
      ++size_[c];
      for (Vertex w : g_.neighbors(v)) ++count(w, c);
      bool viable = true;
      for (Vertex w : g_.neighbors(v))
        if (color_[w] < 0 && !has_option(w)) {
          viable = false;
          break;
        }
      if (viable && place(pos + 1, std::max(used, c + 1))) return true;
      for (Vertex w : g_.neighbors(v)) --count(w, c);
      --size_[c];
      color_[v] = -1;
      if (aborted_) return false;
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive search for a Hoffman coloring of a regular graph. Absence is
/// certified either by a necessary condition failing or by an exhausted
/// search; running out of budget yields Inconclusive.
inline HoffmanSearchResult find_hoffman_coloring(const Graph& g, std::uint64_t budget = kDefaultBudget,
                                                 double tol = kDefaultSpectralTol) {
  const auto data = regular_spectral_data(g, tol);
  HoffmanSearchResult out;
  const int n = g.order();
  auto absent = [&](std::string why) {
    out.outcome = SearchOutcome::Absent;
    out.reason = std::move(why);
    return out;
  };
  if (!data.h.is_integral()) return absent("Hoffman number is not an integer");
  const int h = data.h.rounded();
  if (n % h != 0) return absent("Hoffman number does not divide n");
  const double e_real = -data.eigen.min;
  if (std::abs(e_real - std::round(e_real)) > 1e-6) return absent("-lambda_min is not an integer");
  const int e = static_cast<int>(std::lround(e_real));

  auto finish = [&](std::vector<int> colors, bool trivial) {
    out.coloring = Coloring::from_assignment(std::move(colors));
    auto verdict = verify_hoffman_coloring(g, *out.coloring, tol);
    if (!verdict) throw std::logic_error("find_hoffman_coloring: produced an invalid certificate: " + verdict.rejection);
    out.certificate = std::move(verdict.certificate);
    out.certificate->trivial = trivial;
    out.trivial = trivial;
    out.outcome = SearchOutcome::Found;
    return out;
  };

  if (h == 2) {
    auto side = bipartition(g);
    if (!side.empty()) {
      out.reason = "bipartite";
      return finish(std::move(side), true);
    }
  }
  if (auto parts = detail::multipartite_parts(g); parts && static_cast<int>(*std::max_element(parts->begin(), parts->end())) + 1 == h) {
    out.reason = "complete multipartite";
    return finish(std::move(*parts), true);
  }

  detail::HoffmanColoringSearch search(g, h, e, budget);
  const auto result = search.run();
  out.nodes = search.nodes();
  if (result == SearchOutcome::Found) return finish(search.colors(), false);
  out.outcome = result;
  out.reason = result == SearchOutcome::Absent ? "exhaustive search found no Hoffman coloring" : "search budget exceeded";
  return out;
}

// ---------------------------------------------------------------------------
// Chromatic number: DSATUR branch and bound

struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  Coloring witness;  // proper coloring with `upper` colors
  std::uint64_t nodes = 0;

  bool exact() const { return lower == upper; }
};

namespace detail {

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int lower, std::uint64_t budget)
      : g_(g), n_(g.order()), lower_(lower), budget_(budget) {
    color_.assign(n_, -1);
    seen_.assign(static_cast<std::size_t>(n_) * (n_ + 1), 0);
    saturation_.assign(n_, 0);
  }

  ChromaticResult run() {
    ChromaticResult out;
    greedy();
    if (best_ > lower_) {
      std::fill(color_.begin(), color_.end(), -1);
      std::fill(seen_.begin(), seen_.end(), 0);
      std::fill(saturation_.begin(), saturation_.end(), 0);
      search(0, 0);
    }
    out.nodes = nodes_;
    out.upper = best_;
    out.lower = aborted_ ? lower_ : best_;
    out.witness = Coloring::from_assignment(best_colors_);
    return out;
  }

 private:
  const Graph& g_;
  int n_;
  int lower_;
  std::uint64_t budget_;
  std::vector<int> color_;
  std::vector<int> seen_;  // [vertex*(n+1)+color] neighbors with that color
  std::vector<int> saturation_;
  int best_ = 0;
  std::vector<int> best_colors_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;

  int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * (n_ + 1) + c]; }

  Vertex pick() {
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int deg = 0;
      for (Vertex w : g_.neighbors(v)) deg += color_[w] < 0;
      if (saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
        best = v;
        best_sat = saturation_[v];
        best_deg = deg;
      }
    }
    return best;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v))
      if (seen(w, c)++ == 0) ++saturation_[w];
  }
  void unassign(Vertex v) {
    const int c = color_[v];
    for (Vertex w : g_.neighbors(v))
      if (--seen(w, c) == 0) --saturation_[w];
    color_[v] = -1;
  }

  void greedy() {
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const Vertex v = pick();
      int c = 0;
      while (seen(v, c) > 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    best_ = used;
    best_colors_ = color_;
  }

  void search(int colored, int used) {
    if (aborted_ || best_ <= lower_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (colored == n_) {
      if (used < best_) {
        best_ = used;
        best_colors_ = color_;
      }
      return;
    }
    const Vertex v = pick();
    for (int c = 0; c <= used && c < best_ - 1; ++c) {
      if (seen(v, c) > 0) continue;
      assign(v, c);
      search(colored + 1, std::max(used, c + 1));
      unassign(v);
      if (aborted_ || best_ <= lower_) return;
    }
  }
};

}  // namespace detail

/// Exact chromatic number with a witness coloring. The search is seeded with
/// the lower bound max(ω, ⌈h⌉); for regular graphs with integral h a Hoffman
/// coloring, if found, closes the gap immediately.
inline ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget = kDefaultBudget,
                                        double tol = kDefaultSpectralTol) {
  const int n = g.order();
  if (n == 0) return {};
  if (g.is_empty()) return {1, 1, Coloring::from_assignment(std::vector<int>(n, 0)), 0};
  const auto omega = max_clique(g, budget);
  int lower = omega.lower;
  std::optional<HoffmanNumber> h;
  try {
    h = hoffman_number(g, tol);
    lower = std::max(lower, static_cast<int>(std::ceil(h->value - 1e-9)));
  } catch (const DomainError&) {
  }
  std::uint64_t nodes = omega.nodes;
  if (g.is_regular() && h && h->is_integral() && h->rounded() == lower) {
    auto hc = find_hoffman_coloring(g, budget, tol);
    nodes += hc.nodes;
    if (hc.outcome == SearchOutcome::Found) return {lower, lower, *hc.coloring, nodes};
    if (hc.outcome == SearchOutcome::Absent) lower += 1;  // χ = h is impossible
  }
  auto result = detail::DsaturSearch(g, lower, budget).run();
  result.nodes += nodes;
  return result;
}

// ---------------------------------------------------------------------------
// Delsarte cliques and spreads

struct DelsarteCliqueResult {
  SearchOutcome outcome = SearchOutcome::Inconclusive;
  std::vector<Vertex> clique;
  int alpha = 0;  // neighbors in the clique of every outside vertex
  std::string reason;
};

/// Verify that `clique` is a Delsarte clique of a primitive SRG: size h and
/// every outside vertex adjacent to exactly α of its members.
inline bool is_delsarte_clique(const Graph& g, std::span<const Vertex> clique, int h, int alpha) {
  if (static_cast<int>(clique.size()) != h || !is_clique(g, clique)) return false;
  std::vector<char> in(g.order(), 0);
  for (Vertex v : clique) in[v] = 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    int count = 0;
    for (Vertex w : g.neighbors(v)) count += in[w];
    if (count != alpha) return false;
  }
  return true;
}

namespace detail {

struct PrimitiveSrgData {
  SrgParams params;
  GeometricParams geometric;
};

inline PrimitiveSrgData require_primitive_srg(const Graph& g, const char* what) {
  const auto cls = classify_regularity(g);
  if (!cls.strongly_regular() || cls.primitive != Primitivity::Primitive)
    throw DomainError(std::string(what) + ": graph must be a primitive strongly regular graph");
  const auto p = *cls.srg(g.order());
  return {p, geometric_params(p)};
}

}  // namespace detail

inline DelsarteCliqueResult find_delsarte_clique(const Graph& g, std::uint64_t budget = kDefaultBudget) {
  const auto srg = detail::require_primitive_srg(g, "find_delsarte_clique");
  DelsarteCliqueResult out;
  const auto h = srg.geometric.hoffman();
  if (!h.is_integer()) {
    out.outcome = SearchOutcome::Absent;
    out.reason = "Hoffman number is not an integer";
    return out;
  }
  const int size = static_cast<int>(h.p());
  out.alpha = static_cast<int>(srg.geometric.alpha.p());
  auto search = detail::CliqueSearch(g, budget, size);
  const auto res = search.run();
  if (res.lower >= size) {
    out.clique = res.witness;
    if (!is_delsarte_clique(g, out.clique, size, out.alpha))
      throw std::logic_error("find_delsarte_clique: clique of size h is not alpha-regular");
    out.outcome = SearchOutcome::Found;
    return out;
  }
  out.outcome = res.exact() ? SearchOutcome::Absent : SearchOutcome::Inconclusive;
  out.reason = res.exact() ? "clique number " + std::to_string(res.lower) + " is below h = " + std::to_string(size)
                           : "search budget exceeded";
  return out;
}

struct SpreadResult {
  SearchOutcome outcome = SearchOutcome::Inconclusive;
  std::vector<std::vector<Vertex>> cliques;
  std::string reason;
};

/// Partition into Delsarte cliques, found as a Hoffman coloring of the
/// complement.
inline SpreadResult find_spread(const Graph& g, std::uint64_t budget = kDefaultBudget,
                                double tol = kDefaultSpectralTol) {
  const auto srg = detail::require_primitive_srg(g, "find_spread");
  SpreadResult out;
  auto dual = find_hoffman_coloring(complement(g), budget, tol);
  out.outcome = dual.outcome;
  out.reason = dual.reason;
  if (dual.outcome != SearchOutcome::Found) return out;
  out.cliques = dual.coloring->classes();
  const auto h = srg.geometric.hoffman();
  const int alpha = static_cast<int>(srg.geometric.alpha.p());
  for (const auto& c : out.cliques)
    if (!h.is_integer() || !is_delsarte_clique(g, c, static_cast<int>(h.p()), alpha))
      throw std::logic_error("find_spread: complement color class is not a Delsarte clique");
  return out;
}

}  // namespace hoffman
