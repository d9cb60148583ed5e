#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hoffman/coloring.hpp"
#include "hoffman/error.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/graph6.hpp"
#include "hoffman/params.hpp"
#include "hoffman/regularity.hpp"

namespace hoffman {

// ---------------------------------------------------------------------------
// Labeled enumeration

namespace detail {

class RegularEnumerator {
 public:
  RegularEnumerator(int n, int k, const std::function<void(const Graph&)>& sink)
      : n_(n), k_(k), sink_(sink), deg_(n, 0) {}

  void run() { place(0); }

 private:
  // choose the remaining neighbors of vertex i among j > i
  void place(int i) {
    if (i == n_) {
      sink_(Graph(n_, edges_));
      return;
    }
    const int need = k_ - deg_[i];
    std::vector<int> open;
    for (int j = i + 1; j < n_; ++j)
      if (deg_[j] < k_) open.push_back(j);
    if (need < 0 || static_cast<int>(open.size()) < need) return;
    choose(i, open, 0, need);
  }

  void choose(int i, const std::vector<int>& open, std::size_t from, int need) {
    if (need == 0) {
      // every later vertex can still reach degree k using vertices after i
      for (int j = i + 1; j < n_; ++j)
        if (k_ - deg_[j] > n_ - i - 2) return;
      place(i + 1);
      return;
    }
    for (std::size_t p = from; p + need <= open.size(); ++p) {
      const int j = open[p];
      ++deg_[i];
      ++deg_[j];
      edges_.emplace_back(i, j);
      choose(i, open, p + 1, need - 1);
      edges_.pop_back();
      --deg_[i];
      --deg_[j];
    }
  }

  int n_, k_;
  const std::function<void(const Graph&)>& sink_;
  std::vector<int> deg_;
  std::vector<Edge> edges_;
};

}  // namespace detail

/// Calls `sink` once per labeled k-regular graph on vertices 0..n-1.
inline void enumerate_regular_graphs(int n, int k, bool connected_only, const std::function<void(const Graph&)>& sink) {
  if (n < 0 || n > 10) throw InputError("enumerate_regular_graphs: supports n <= 10");
  if (k < 0 || (k >= n && n > 0) || (n * k) % 2 != 0) return;
  std::function<void(const Graph&)> filtered = [&](const Graph& g) {
    if (!connected_only || is_connected(g)) sink(g);
  };
  detail::RegularEnumerator(n, k, filtered).run();
}

inline std::vector<Graph> regular_graphs(int n, int k, bool connected_only) {
  std::vector<Graph> out;
  enumerate_regular_graphs(n, k, connected_only, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Corpus files

struct CorpusDiagnostic {
  int line = 0;
  std::string message;
};

struct Corpus {
  std::vector<Graph> graphs;
  std::vector<int> lines;  // source line of each graph
  std::vector<CorpusDiagnostic> diagnostics;
};

inline Corpus ingest_corpus_stream(std::istream& in) {
  Corpus out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto text = detail::trim(line);
    if (text.empty()) continue;
    if (text.front() == '>' && text.rfind(">>graph6<<", 0) != 0) continue;
    if (text == ">>graph6<<") continue;
    try {
      out.graphs.push_back(parse_graph6(text));
      out.lines.push_back(number);
    } catch (const InputError& e) {
      out.diagnostics.push_back({number, e.what()});
    }
  }
  return out;
}

/// One graph6 string per line; header lines beginning with '>' are skipped
/// and malformed lines become diagnostics.
inline Corpus ingest_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read corpus file: " + path);
  return ingest_corpus_stream(in);
}

// ---------------------------------------------------------------------------
// Campaigns

struct CampaignRecord {
  std::string graph6;  // empty for parameter-grid records
  std::vector<std::pair<std::string, double>> values;
  std::string note;
};

struct CampaignOptions {
  int n_max = 8;
  int jobs = 1;
  std::optional<std::string> corpus;
  double tol = 1e-7;
  std::uint64_t budget = kDefaultBudget;
};

struct CampaignResult {
  std::string campaign;
  long long scanned = 0;
  long long skipped = 0;  // corpus graphs outside the universe
  std::vector<CampaignRecord> violations;
  std::vector<CampaignRecord> equalities;
  std::vector<CorpusDiagnostic> diagnostics;
  CampaignOptions params;
  double runtime = 0.0;
  bool pass = false;
};

inline const std::vector<std::string>& campaign_ids() {
  static const std::vector<std::string> ids{"product", "avg-identities", "h-le-sbar", "cor-h3", "hoffman-equitable"};
  return ids;
}

/// The primitive parameter sets with h <= 3.
inline const std::vector<SrgParams>& small_hoffman_srgs() {
  static const std::vector<SrgParams> list{
      {5, 2, 0, 1}, {9, 4, 1, 2}, {10, 3, 0, 1}, {15, 6, 1, 3}, {16, 5, 0, 2}, {27, 10, 1, 5}};
  return list;
}

namespace detail {

struct GraphVerdict {
  std::optional<CampaignRecord> violation;
  std::optional<CampaignRecord> equality;
};

using GraphCheck = std::function<GraphVerdict(const Graph&, const CampaignOptions&)>;

inline CampaignRecord record(const Graph& g, std::vector<std::pair<std::string, double>> values, std::string note = {}) {
  return {to_graph6(g), std::move(values), std::move(note)};
}

inline bool exactly_srg(const Graph& g) { return classify_regularity(g).strongly_regular(); }

inline GraphVerdict check_product(const Graph& g, const CampaignOptions& opt) {
  const double h = hoffman_number(g, kDefaultSpectralTol).value;
  const double hc = hoffman_number(complement(g), kDefaultSpectralTol).value;
  const int n = g.order();
  const double slack = n - h * hc;
  const bool srg = exactly_srg(g);
  const bool eq = std::abs(slack) <= opt.tol;
  std::vector<std::pair<std::string, double>> vals{{"n", n}, {"h", h}, {"h_complement", hc}, {"slack", slack}};
  GraphVerdict v;
  if (slack < -opt.tol) v.violation = record(g, vals, "product exceeds n");
  else if (eq != srg) v.violation = record(g, vals, eq ? "equality on a graph that is not strongly regular"
                                                       : "strict inequality on a strongly regular graph");
  if (eq && srg) v.equality = record(g, vals);
  return v;
}

inline GraphVerdict check_avg_identities(const Graph& g, const CampaignOptions& opt) {
  const Graph co = complement(g);
  const auto p = average_params(g);
  const auto q = average_params(co);
  const int n = p.n, k = p.k;
  std::vector<std::string> broken;
  if (p.c_bar * Rational(n - k - 1) != Rational(k) * (Rational(k - 1) - p.a_bar)) broken.push_back("c(n-k-1) = k(k-a-1)");
  if (q.a_bar != Rational(n - 2 - 2 * k) + p.c_bar) broken.push_back("a' = n-2-2k+c");
  if (q.c_bar != Rational(n - 2 * k) + p.a_bar) broken.push_back("c' = n-2k+a");
  const double prod = (p.s_bar + 1.0) * (q.s_bar + 1.0);
  if (std::abs(prod - n) > opt.tol) broken.push_back("(s+1)(s'+1) = n");
  if (std::abs(q.tau_bar - (-1.0 - p.theta_bar)) > 1e-9) broken.push_back("tau' = -1-theta");
  const double s_edge = s_bar_from_edge_data(n, k, p.a_bar);
  if (std::abs(s_edge - p.s_bar) > 1e-9) broken.push_back("s from edge data");
  GraphVerdict v;
  if (!broken.empty()) {
    std::string note;
    for (const auto& b : broken) note += (note.empty() ? "" : "; ") + b;
    v.violation = record(g,
                         {{"n", n}, {"k", k}, {"a_bar", to_double(p.a_bar)}, {"c_bar", to_double(p.c_bar)},
                          {"s_bar", p.s_bar}, {"s_bar_complement", q.s_bar}, {"product", prod}},
                         note);
  }
  return v;
}

inline GraphVerdict check_h_le_sbar(const Graph& g, const CampaignOptions& opt) {
  const double h = hoffman_number(g, kDefaultSpectralTol).value;
  const auto p = average_params(g);
  const double bound = p.s_bar + 1.0;
  const bool srg = exactly_srg(g);
  const bool eq = std::abs(bound - h) <= opt.tol;
  std::vector<std::pair<std::string, double>> vals{{"n", p.n}, {"k", p.k}, {"h", h}, {"s_bar_plus_1", bound}};
  GraphVerdict v;
  if (h > bound + 1e-9) v.violation = record(g, vals, "h exceeds s+1");
  else if (eq != srg) v.violation = record(g, vals, eq ? "equality on a graph that is not strongly regular"
                                                       : "strict inequality on a strongly regular graph");
  if (eq && srg) v.equality = record(g, vals);
  return v;
}

inline GraphVerdict check_hoffman_equitable(const Graph& g, const CampaignOptions& opt) {
  GraphVerdict v;
  const auto result = find_hoffman_coloring(g, opt.budget);
  const auto chi = chromatic_number(g, opt.budget);
  const auto h = hoffman_number(g, kDefaultSpectralTol);
  std::vector<std::pair<std::string, double>> vals{
      {"n", g.order()}, {"h", h.value}, {"chi_lower", chi.lower}, {"chi_upper", chi.upper}};
  if (result.outcome == SearchOutcome::Inconclusive || !chi.exact()) {
    v.violation = record(g, vals, "search budget exhausted");
    return v;
  }
  const bool attains = h.is_integral() && chi.upper == h.rounded();
  const bool found = result.outcome == SearchOutcome::Found;
  if (found != attains) {
    v.violation = record(g, vals, found ? "Hoffman coloring found but chi != h" : "chi = h but no Hoffman coloring");
    return v;
  }
  if (!found) return v;
  // independent re-check: every class is a Hoffman coclique
  for (const auto& cls : result.coloring->classes()) {
    const auto check = is_hoffman_coclique(g, cls);
    if (!check.hoffman) {
      v.violation = record(g, vals, "color class is not a Hoffman coclique: " + check.reason);
      return v;
    }
  }
  const auto cert = verify_hoffman_coloring(g, *result.coloring);
  if (!cert) {
    v.violation = record(g, vals, "certificate rejected: " + cert.rejection);
    return v;
  }
  vals.emplace_back("class_size", cert.certificate->class_size);
  vals.emplace_back("cross_degree", cert.certificate->cross_degree);
  v.equality = record(g, vals, result.trivial ? "trivial" : "");
  return v;
}

inline GraphCheck graph_check(const std::string& id) {
  if (id == "product") return check_product;
  if (id == "avg-identities") return check_avg_identities;
  if (id == "h-le-sbar") return check_h_le_sbar;
  if (id == "hoffman-equitable") return check_hoffman_equitable;
  throw InputError("unknown campaign: " + id + " (expected one of product, avg-identities, h-le-sbar, cor-h3, hoffman-equitable)");
}

inline bool in_universe(const Graph& g) {
  return g.order() >= 2 && g.is_regular() && !g.is_empty() && !g.is_complete() && is_connected(g);
}

// Evaluate one batch in parallel; verdicts stay in input order.
inline void evaluate_batch(const std::vector<Graph>& batch, const GraphCheck& check, const CampaignOptions& opt,
                           CampaignResult& out) {
  std::vector<GraphVerdict> verdicts(batch.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < batch.size(); i = next++) {
      try {
        verdicts[i] = check(batch[i], opt);
      } catch (const std::exception& e) {
        verdicts[i].violation = record(batch[i], {{"n", batch[i].order()}}, std::string("error: ") + e.what());
      }
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& v : verdicts) {
    if (v.violation) out.violations.push_back(std::move(*v.violation));
    if (v.equality) out.equalities.push_back(std::move(*v.equality));
  }
  out.scanned += static_cast<long long>(batch.size());
}

inline void run_cor_h3(const CampaignOptions& opt, CampaignResult& out) {
  const auto found = srg_param_search(opt.n_max, 3.0, {}, opt.jobs);
  for (int n = 2; n <= opt.n_max; ++n) out.scanned += static_cast<long long>(n) * n;  // (k, a, c) grid points
  std::vector<SrgParams> expected;
  for (const auto& p : small_hoffman_srgs())
    if (p.n <= opt.n_max) expected.push_back(p);
  auto as_record = [](const SrgCandidate& c, std::string note) {
    CampaignRecord r;
    r.values = {{"n", c.params.n},         {"k", c.params.k},         {"a", c.params.a},
                {"c", c.params.c},         {"s", c.geometric.s.value()}, {"t", c.geometric.t.value()},
                {"alpha", c.geometric.alpha.value()}, {"h", c.hoffman.value()}};
    r.note = std::move(note);
    return r;
  };
  for (const auto& c : found) {
    const bool listed = std::find(expected.begin(), expected.end(), c.params) != expected.end();
    if (listed) out.equalities.push_back(as_record(c, to_string(c.params)));
    else out.violations.push_back(as_record(c, "unexpected parameter set " + to_string(c.params)));
  }
  for (const auto& p : expected) {
    const bool hit = std::any_of(found.begin(), found.end(), [&](const auto& c) { return c.params == p; });
    if (!hit) {
      CampaignRecord r;
      r.values = {{"n", p.n}, {"k", p.k}, {"a", p.a}, {"c", p.c}};
      r.note = "missing parameter set " + to_string(p);
      out.violations.push_back(std::move(r));
    }
  }
}

}  // namespace detail

/// Runs one verification campaign over all connected regular graphs that
/// are neither empty nor complete with n <= n_max (or over a corpus file,
/// or over the parameter grid for "cor-h3").
inline CampaignResult run_campaign(const std::string& id, const CampaignOptions& opt = {}) {
  CampaignResult out;
  out.campaign = id;
  out.params = opt;
  const auto start = std::chrono::steady_clock::now();
  if (id == "cor-h3") {
    if (opt.n_max < 2 || opt.n_max > 200) throw InputError("cor-h3: n_max must lie in [2, 200]");
    detail::run_cor_h3(opt, out);
  } else {
    const auto check = detail::graph_check(id);
    constexpr std::size_t kBatch = 2048;
    std::vector<Graph> batch;
    auto flush = [&] {
      detail::evaluate_batch(batch, check, opt, out);
      batch.clear();
    };
    if (opt.corpus) {
      auto corpus = ingest_corpus(*opt.corpus);
      out.diagnostics = corpus.diagnostics;
      for (auto& g : corpus.graphs) {
        if (!detail::in_universe(g)) {
          ++out.skipped;
          continue;
        }
        batch.push_back(std::move(g));
        if (batch.size() == kBatch) flush();
      }
    } else {
      if (opt.n_max < 3 || opt.n_max > 10) throw InputError("campaign n_max must lie in [3, 10]");
      for (int n = 3; n <= opt.n_max; ++n)
        for (int k = 1; k <= n - 2; ++k)
          enumerate_regular_graphs(n, k, true, [&](const Graph& g) {
            batch.push_back(g);
            if (batch.size() == kBatch) flush();
          });
    }
    flush();
  }
  out.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = out.violations.empty();
  return out;
}

inline nlohmann::ordered_json to_json(const CampaignRecord& r) {
  nlohmann::ordered_json j;
  if (!r.graph6.empty()) j["graph6"] = r.graph6;
  nlohmann::ordered_json vals = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.values) vals[k] = v;
  j["values"] = vals;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json to_json(const CampaignResult& r, bool include_runtime = true) {
  nlohmann::ordered_json j;
  j["campaign"] = r.campaign;
  j["scanned"] = r.scanned;
  j["skipped"] = r.skipped;
  j["pass"] = r.pass;
  auto list = [](const std::vector<CampaignRecord>& recs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& rec : recs) arr.push_back(to_json(rec));
    return arr;
  };
  j["violations"] = list(r.violations);
  j["equalities"] = list(r.equalities);
  auto diags = nlohmann::ordered_json::array();
  for (const auto& d : r.diagnostics) diags.push_back({{"line", d.line}, {"message", d.message}});
  j["diagnostics"] = diags;
  nlohmann::ordered_json params;
  params["n_max"] = r.params.n_max;
  params["tol"] = r.params.tol;
  params["budget"] = r.params.budget;
  params["jobs"] = r.params.jobs;
  if (r.params.corpus) params["corpus"] = *r.params.corpus;
  j["params"] = params;
  if (include_runtime) j["runtime"] = r.runtime;
  return j;
}

}  // namespace hoffman
