#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoffman/bounds.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/error.hpp"
#include "hoffman/families.hpp"
#include "hoffman/graph6.hpp"
#include "hoffman/params.hpp"
#include "hoffman/regularity.hpp"
#include "hoffman/spectral.hpp"
#include "hoffman/survey.hpp"
#include "hoffman/vector_coloring.hpp"

namespace hoffman::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2, kInconclusive = 3 };

struct CliConfig {
  std::string input;
  std::string format = "text";
  std::optional<double> tol;
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  std::string out;

  double spectral_tol() const { return tol.value_or(kDefaultSpectralTol); }
  double sdp_tol() const { return tol.value_or(1e-6); }
};

/// `named:FAMILY(args)`, `g6:STRING`, or a path to a graph6 / edge-list file.
inline Graph read_graph(const std::string& source) {
  if (source.rfind("named:", 0) == 0) return named_graph(source.substr(6));
  if (source.rfind("g6:", 0) == 0) return parse_graph6(source.substr(3));
  std::ifstream in(source);
  if (!in) throw InputError("cannot read input '" + source + "' (expected named:NAME, g6:STRING or a file)");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto t = detail::trim(line);
    if (t.empty() || t == ">>graph6<<") continue;
    if (t.front() == '>' && t.rfind(">>graph6<<", 0) != 0) continue;
    return parse_graph6(t);
  }
  throw ParseError("input file '" + source + "' contains no graph");
}

// ---------------------------------------------------------------------------
// JSON building blocks

/// 12 significant digits, so output is stable across platforms.
inline double num(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

inline json quad(const QuadraticNumber& q) { return {{"exact", q.str()}, {"value", num(q.value())}}; }

inline json classes_json(const Coloring& col) {
  json arr = json::array();
  for (const auto& cls : col.classes()) arr.push_back(cls);
  return arr;
}

inline json graph_json(const Graph& g) {
  return {{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}};
}

inline json entry_json(const BoundEntry& e) {
  json j;
  j["applicable"] = e.applicable;
  if (!e.applicable) {
    j["reason"] = e.reason;
    return j;
  }
  j["value"] = num(e.value);
  if (e.exact) j["exact"] = *e.exact;
  if (e.actual) j["actual"] = num(*e.actual);
  j["tight"] = e.tight;
  return j;
}

inline json bounds_json(const BoundReport& r) {
  json j;
  j["hoffman"] = entry_json(r.hoffman);
  j["ratio"] = entry_json(r.ratio);
  j["classic"] = entry_json(r.classic);
  j["neumaier"] = entry_json(r.neumaier);
  j["co_edge"] = entry_json(r.co_edge);
  j["triangles"] = entry_json(r.triangles);
  j["product"] = entry_json(r.product);
  if (r.product.applicable) j["product"]["slack"] = num(r.product_slack);
  return j;
}

inline json geometric_json(const GeometricParams& gp) {
  return {{"s", quad(gp.s)},
          {"t", quad(gp.t)},
          {"alpha", quad(gp.alpha)},
          {"classification", to_string(gp.classification)}};
}

inline json analyze_json(const Graph& g, const CliConfig& cfg) {
  const double tol = cfg.spectral_tol();
  json j;
  j["graph"] = graph_json(g);
  const auto cls = classify_regularity(g);
  json reg;
  reg["kind"] = to_string(cls.kind);
  reg["k"] = cls.k ? json(*cls.k) : json(nullptr);
  reg["a"] = cls.a ? json(*cls.a) : json(nullptr);
  reg["c"] = cls.c ? json(*cls.c) : json(nullptr);
  reg["primitive"] = to_string(cls.primitive);
  j["regularity"] = reg;
  j["connected"] = is_connected(g);

  const auto s = spectrum(g, tol);
  json groups = json::array();
  for (const auto& grp : s.groups()) groups.push_back({{"value", num(grp.value)}, {"multiplicity", grp.multiplicity}});
  j["spectrum"] = {{"lambda_max", num(s.lambda_max())}, {"lambda_min", num(s.lambda_min())}, {"eigenvalues", groups}};
  j["walk_regularity"] = is_connected(g) ? json(to_string(walk_regularity_level(g, tol))) : json(nullptr);

  if (g.is_empty()) {
    j["hoffman_number"] = nullptr;
  } else {
    const auto h = hoffman_number(g, tol);
    j["hoffman_number"] = {{"value", num(h.value)}, {"exact", h.exact ? json(h.exact->str()) : json(nullptr)}};
  }

  if (auto p = cls.srg(g.order())) {
    const auto ev = srg_exact_eigenvalues(*p);
    json srg{{"n", p->n}, {"k", p->k}, {"a", p->a}, {"c", p->c}};
    srg["theta"] = quad(ev.theta);
    srg["tau"] = quad(ev.tau);
    srg["theta_multiplicity"] = quad(ev.theta_multiplicity);
    srg["tau_multiplicity"] = quad(ev.tau_multiplicity);
    if (p->primitive()) {
      const auto gp = geometric_params(*p);
      srg["geometric"] = geometric_json(gp);
      if (gp.s != gp.alpha) srg["complement_geometric"] = geometric_json(complement_geometric(gp));
    }
    j["srg"] = srg;
  } else {
    j["srg"] = nullptr;
  }

  if (cls.regular() && !g.is_empty() && !g.is_complete()) {
    const auto avg = average_params(g);
    j["average"] = {{"a_bar", to_string(avg.a_bar)}, {"c_bar", to_string(avg.c_bar)},
                    {"tau_bar", num(avg.tau_bar)},  {"theta_bar", num(avg.theta_bar)},
                    {"s_bar", num(avg.s_bar)}};
  } else {
    j["average"] = nullptr;
  }
  j["bounds"] = bounds_json(bound_report(g, cfg.budget, tol));
  return j;
}

inline json certificate_json(const HoffmanCertificate& c) {
  return {{"h", c.h},
          {"class_size", c.class_size},
          {"cross_degree", c.cross_degree},
          {"trivial", c.trivial},
          {"cross_degrees", c.cross_degrees}};
}

inline json theta_json(const ThetaResult& t, ThetaVariant v) {
  return {{"variant", to_string(v)},        {"value", num(t.value)},
          {"lower", num(t.lower)},          {"upper", num(t.upper)},
          {"gap", num(t.gap)},              {"primal_residual", num(t.primal_residual)},
          {"dual_residual", num(t.dual_residual)}, {"iterations", t.iterations}};
}

// ---------------------------------------------------------------------------
// Text rendering: flattened "key  value" lines

namespace detail {

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(10) << v.get<double>();
    return os.str();
  }
  return v.dump();
}

inline bool scalar_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

inline void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (scalar_array(v)) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    out.emplace_back(prefix, s + "]");
  } else if (v.is_array()) {
    if (v.empty()) out.emplace_back(prefix, "[]");
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

}  // namespace detail

inline std::string render_text(const json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  detail::flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  return os.str();
}

inline std::string searchsrg_csv(const std::vector<SrgCandidate>& list) {
  std::ostringstream os;
  os << "n,k,a,c,s,t,alpha,h,classification\n";
  for (const auto& c : list)
    os << c.params.n << "," << c.params.k << "," << c.params.a << "," << c.params.c << "," << c.geometric.s.str()
       << "," << c.geometric.t.str() << "," << c.geometric.alpha.str() << "," << c.hoffman.str() << ","
       << to_string(c.geometric.classification) << "\n";
  return os.str();
}

inline json catalog_json(const CliConfig& cfg) {
  json arr = json::array();
  for (const auto& name : catalog_names()) {
    const Graph g = named_graph(name);
    const auto cls = classify_regularity(g);
    json e{{"name", name}, {"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}, {"kind", to_string(cls.kind)}};
    e["k"] = cls.k ? json(*cls.k) : json(nullptr);
    e["a"] = cls.a ? json(*cls.a) : json(nullptr);
    e["c"] = cls.c ? json(*cls.c) : json(nullptr);
    const auto h = hoffman_number(g, cfg.spectral_tol());
    e["h"] = h.exact ? h.exact->str() : std::to_string(num(h.value));
    if (auto p = cls.srg(g.order()); p && p->primitive())
      e["geometric"] = to_string(geometric_params(*p).classification);
    else
      e["geometric"] = nullptr;
    arr.push_back(e);
  }
  return {{"graphs", arr}};
}

inline std::string catalog_text(const json& j) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "name" << std::setw(5) << "n" << std::setw(24) << "regularity"
     << std::setw(16) << "(k,a,c)" << std::setw(18) << "h"
     << "geometric\n";
  auto opt = [](const json& v) { return v.is_null() ? std::string("-") : v.dump(); };
  for (const auto& e : j["graphs"]) {
    const std::string kac = "(" + opt(e["k"]) + "," + opt(e["a"]) + "," + opt(e["c"]) + ")";
    os << std::left << std::setw(28) << e["name"].get<std::string>() << std::setw(5) << e["n"].get<int>()
       << std::setw(24) << e["kind"].get<std::string>() << std::setw(16) << kac << std::setw(18)
       << e["h"].get<std::string>() << (e["geometric"].is_null() ? "-" : e["geometric"].get<std::string>()) << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 domain error, 2 usage error, 3 inconclusive.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hoffman colorings and spectral bounds for regular graphs", "hoffman"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("HOFFMAN_FORMAT");
  app.add_option("--tol", cfg.tol, "numerical tolerance (spectral default 1e-7, SDP default 1e-6)")
      ->envname("HOFFMAN_TOL");
  app.add_option("--budget", cfg.budget, "search budget in nodes")->envname("HOFFMAN_BUDGET");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->envname("HOFFMAN_JOBS");
  app.add_option("--out", cfg.out, "write output to this file instead of stdout")->envname("HOFFMAN_OUT");

  auto* analyze = app.add_subcommand("analyze", "regularity, spectrum, parameters and bounds");
  analyze->add_option("input", cfg.input, "named:NAME(args) | g6:STRING | file")->required();

  std::string mode = "chromatic";
  auto* color = app.add_subcommand("color", "colorings, Hoffman certificates, Delsarte cliques, spreads");
  color->add_option("--mode", mode)->check(CLI::IsMember({"chromatic", "hoffman", "spread", "delsarte-clique"}));
  color->add_option("input", cfg.input)->required();

  std::string variant = "theta";
  auto* theta = app.add_subcommand("theta", "Lovasz theta of the graph");
  theta->add_option("--variant", variant)->check(CLI::IsMember({"theta", "theta-prime"}));
  theta->add_option("input", cfg.input)->required();

  auto* sandwich = app.add_subcommand("sandwich", "h <= chi_v <= chi_sv <= chi");
  sandwich->add_option("input", cfg.input)->required();

  std::string export_prefix;
  auto* witness = app.add_subcommand("witness", "two optimal vector colorings with different Gram matrices");
  witness->add_option("--export", export_prefix, "write PREFIX-simplex.csv and PREFIX-canonical.csv");
  witness->add_option("input", cfg.input)->required();

  int nmax = 30;
  double hmax = 3.0;
  bool no_krein = false, no_abs = false;
  auto* searchsrg = app.add_subcommand("searchsrg", "feasible primitive SRG parameters with small Hoffman number");
  searchsrg->add_option("--nmax", nmax)->check(CLI::Range(2, 200));
  searchsrg->add_option("--hmax", hmax);
  searchsrg->add_flag("--no-krein", no_krein, "skip the Krein conditions");
  searchsrg->add_flag("--no-absolute-bound", no_abs, "skip the absolute bound");

  std::string check;
  int survey_nmax = 8;
  std::string corpus;
  auto* survey = app.add_subcommand("survey", "exhaustive verification campaigns");
  survey->add_option("--check", check)->required()->check(CLI::IsMember(campaign_ids()));
  survey->add_option("--nmax", survey_nmax);
  survey->add_option("--corpus", corpus, "graph6 corpus instead of enumeration")->check(CLI::ExistingFile);

  auto* catalog = app.add_subcommand("catalog", "embedded named graphs with verified parameters");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool as_json = cfg.format == "json";
  int code = kOk;
  std::string text;
  auto emit = [&](const json& j) { text = as_json ? j.dump(2) + "\n" : render_text(j); };

  try {
    if (cfg.tol && !(*cfg.tol > 0.0 && *cfg.tol <= 1e-4)) throw InputError("--tol must lie in (0, 1e-4]");
    if (analyze->parsed()) {
      emit(analyze_json(read_graph(cfg.input), cfg));
    } else if (color->parsed()) {
      const Graph g = read_graph(cfg.input);
      const double tol = cfg.spectral_tol();
      json j{{"mode", mode}, {"graph", graph_json(g)}};
      if (mode == "chromatic") {
        const auto r = chromatic_number(g, cfg.budget, tol);
        j["exact"] = r.exact();
        j["chi"] = r.exact() ? json(r.upper) : json(nullptr);
        j["lower"] = r.lower;
        j["upper"] = r.upper;
        j["classes"] = classes_json(r.witness);
        j["nodes"] = r.nodes;
        if (!r.exact()) code = kInconclusive;
      } else if (mode == "hoffman") {
        const auto r = find_hoffman_coloring(g, cfg.budget, tol);
        j["outcome"] = to_string(r.outcome);
        j["trivial"] = r.trivial;
        j["reason"] = r.reason;
        j["classes"] = r.coloring ? classes_json(*r.coloring) : json(nullptr);
        j["certificate"] = r.certificate ? certificate_json(*r.certificate) : json(nullptr);
        j["nodes"] = r.nodes;
        if (r.outcome == SearchOutcome::Inconclusive) code = kInconclusive;
      } else if (mode == "spread") {
        const auto r = find_spread(g, cfg.budget, tol);
        j["outcome"] = to_string(r.outcome);
        j["reason"] = r.reason;
        j["cliques"] = r.cliques;
        if (r.outcome == SearchOutcome::Inconclusive) code = kInconclusive;
      } else {
        const auto r = find_delsarte_clique(g, cfg.budget);
        j["outcome"] = to_string(r.outcome);
        j["reason"] = r.reason;
        j["clique"] = r.clique;
        j["alpha"] = r.alpha;
        if (r.outcome == SearchOutcome::Inconclusive) code = kInconclusive;
      }
      emit(j);
    } else if (theta->parsed()) {
      const Graph g = read_graph(cfg.input);
      const auto v = variant == "theta" ? ThetaVariant::Theta : ThetaVariant::ThetaPrime;
      json j{{"graph", graph_json(g)}};
      j.update(theta_json(lovasz_theta(g, {v, cfg.sdp_tol()}), v));
      emit(j);
    } else if (sandwich->parsed()) {
      const Graph g = read_graph(cfg.input);
      const auto r = sandwich_report(g, cfg.sdp_tol(), cfg.budget);
      json j{{"graph", graph_json(g)},
             {"h", num(r.h.value)},
             {"chi_v", num(r.chi_v.value)},
             {"chi_sv", num(r.chi_sv.value)},
             {"chi", r.chi.exact() ? json(r.chi.upper) : json(nullptr)},
             {"chi_lower", r.chi.lower},
             {"chi_upper", r.chi.upper},
             {"tol", num(r.tol)},
             {"checks",
              {{"h_le_chi_v", r.h_le_chi_v}, {"chi_v_le_chi_sv", r.chi_v_le_chi_sv}, {"chi_sv_le_chi", r.chi_sv_le_chi}}},
             {"holds", r.holds()}};
      emit(j);
      if (!r.chi.exact()) code = kInconclusive;
    } else if (witness->parsed()) {
      const Graph g = read_graph(cfg.input);
      const auto w = non_uvc_witness(g, cfg.budget, cfg.spectral_tol());
      json j{{"graph", graph_json(g)}, {"applicable", w.applicable}};
      if (!w.applicable) {
        j["failed_hypothesis"] = w.failed_hypothesis;
        code = w.failed_hypothesis.find("budget") != std::string::npos ? kInconclusive : kDomain;
      } else {
        j["h"] = num(w.simplex->t);
        j["classes"] = classes_json(*w.hoffman_coloring);
        j["simplex_dimension"] = w.simplex->dimension();
        j["canonical_dimension"] = w.canonical->dimension();
        j["simplex_locally_injective"] = check_vector_coloring(g, *w.simplex).locally_injective;
        j["canonical_locally_injective"] = check_vector_coloring(g, *w.canonical).locally_injective;
        j["pair"] = {w.pair->first, w.pair->second};
        j["simplex_gram"] = num(w.simplex_gram);
        j["canonical_gram"] = num(w.canonical_gram);
        if (!export_prefix.empty()) {
          std::ofstream(export_prefix + "-simplex.csv") << to_csv(*w.simplex);
          std::ofstream(export_prefix + "-canonical.csv") << to_csv(*w.canonical);
        }
      }
      emit(j);
    } else if (searchsrg->parsed()) {
      if (!(hmax > 1.0)) throw InputError("--hmax must exceed 1");
      const auto list = srg_param_search(nmax, hmax, {!no_krein, !no_abs}, cfg.jobs);
      if (as_json) {
        json arr = json::array();
        for (const auto& c : list) {
          json e{{"n", c.params.n}, {"k", c.params.k}, {"a", c.params.a}, {"c", c.params.c}};
          e.update(geometric_json(c.geometric));
          e["h"] = quad(c.hoffman);
          arr.push_back(e);
        }
        emit(json{{"nmax", nmax}, {"hmax", hmax}, {"parameters", arr}});
      } else {
        text = searchsrg_csv(list);
      }
    } else if (survey->parsed()) {
      CampaignOptions opt;
      opt.n_max = survey_nmax;
      opt.jobs = cfg.jobs;
      opt.budget = cfg.budget;
      if (cfg.tol) opt.tol = *cfg.tol;
      if (!corpus.empty()) opt.corpus = corpus;
      const auto r = run_campaign(check, opt);
      emit(to_json(r));
      if (!r.pass) code = kDomain;
    } else if (catalog->parsed()) {
      const auto j = catalog_json(cfg);
      text = as_json ? j.dump(2) + "\n" : catalog_text(j);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }

  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace hoffman::cli
