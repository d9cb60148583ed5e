#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hoffman/cli.hpp"

using namespace hoffman;
using hoffman::cli::json;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hoffman_cli_" + name);
}

void expect_keys(const json& j, std::initializer_list<const char*> keys, const std::string& ctx) {
  for (const char* k : keys) EXPECT_TRUE(j.contains(k)) << ctx << ": missing " << k;
}

}  // namespace

TEST(Analyze, Petersen) {
  const auto r = run({"--format", "json", "analyze", "named:petersen"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.parsed();
  EXPECT_DOUBLE_EQ(j["hoffman_number"]["value"].get<double>(), 2.5);
  EXPECT_EQ(j["hoffman_number"]["exact"], "5/2");
  const auto& srg = j["srg"];
  EXPECT_EQ(srg["n"], 10);
  EXPECT_EQ(srg["k"], 3);
  EXPECT_EQ(srg["a"], 0);
  EXPECT_EQ(srg["c"], 1);
  EXPECT_EQ(srg["geometric"]["s"]["exact"], "3/2");
  EXPECT_EQ(srg["geometric"]["t"]["exact"], "1");
  EXPECT_EQ(srg["geometric"]["alpha"]["exact"], "1/2");
  EXPECT_EQ(srg["geometric"]["classification"], "rational-non-integral");
  EXPECT_EQ(j["regularity"]["kind"], "strongly-regular");
  EXPECT_EQ(j["bounds"]["hoffman"]["actual"], 3);
}

TEST(Analyze, TextModeIsFlattened) {
  const auto r = run({"analyze", "named:petersen"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hoffman_number.value"), std::string::npos);
  EXPECT_NE(r.out.find("srg.geometric.s.exact"), std::string::npos);
  EXPECT_EQ(r.out, run({"analyze", "named:petersen"}).out);  // deterministic
}

TEST(Analyze, InputForms) {
  const auto a = run({"--format", "json", "analyze", "g6:IheA@GUAo"}).parsed();
  EXPECT_EQ(a["srg"]["k"], 3);
  const auto g6 = temp_path("petersen.g6");
  std::ofstream(g6) << ">>graph6<<IheA@GUAo\n";
  EXPECT_EQ(run({"--format", "json", "analyze", g6.string()}).parsed()["graph"]["m"], 15);
  const auto el = temp_path("square.txt");
  std::ofstream(el) << "4\n0 1\n1 2\n2 3\n3 0\n";
  const auto sq = run({"--format", "json", "analyze", el.string()});
  ASSERT_EQ(sq.code, 0) << sq.err;
  EXPECT_EQ(sq.parsed()["graph"]["n"], 4);
  std::filesystem::remove(g6);
  std::filesystem::remove(el);
}

TEST(Color, HoffmanCertificateOnShrikhande) {
  const auto r = run({"--format", "json", "color", "--mode", "hoffman", "named:shrikhande"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.parsed();
  EXPECT_EQ(j["outcome"], "found");
  EXPECT_EQ(j["certificate"]["h"], 4);
  EXPECT_EQ(j["certificate"]["class_size"], 4);
  EXPECT_EQ(j["certificate"]["cross_degree"], 2);
  EXPECT_EQ(j["classes"].size(), 4u);
}

TEST(Color, OtherModes) {
  EXPECT_EQ(run({"--format", "json", "color", "named:petersen"}).parsed()["chi"], 3);
  EXPECT_EQ(run({"--format", "json", "color", "--mode", "hoffman", "named:petersen"}).parsed()["outcome"], "absent");
  EXPECT_EQ(run({"--format", "json", "color", "--mode", "spread", "named:rook(3)"}).parsed()["cliques"].size(), 3u);
  EXPECT_EQ(run({"--format", "json", "color", "--mode", "delsarte-clique", "named:rook(3)"}).parsed()["alpha"], 1);
}

TEST(Theta, CycleFive) {
  const auto r = run({"--format", "json", "theta", "named:cycle(5)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.parsed()["value"].get<double>(), 2.2360679775, 1e-4);
  const auto p = run({"--format", "json", "theta", "--variant", "theta-prime", "named:petersen"});
  EXPECT_NEAR(p.parsed()["value"].get<double>(), 4.0, 1e-4);
  EXPECT_EQ(p.parsed()["variant"], "theta-prime");
}

TEST(Sandwich, Petersen) {
  const auto j = run({"--format", "json", "sandwich", "named:petersen"}).parsed();
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_NEAR(j["chi_v"].get<double>(), 2.5, 1e-4);
  EXPECT_EQ(j["chi"], 3);
}

TEST(Witness, ExportWritesCsv) {
  const auto prefix = temp_path("rook3").string();
  const auto r = run({"--format", "json", "witness", "--export", prefix, "named:rook(3)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.parsed()["applicable"].get<bool>());
  for (const char* suffix : {"-simplex.csv", "-canonical.csv"}) {
    std::ifstream in(prefix + suffix);
    ASSERT_TRUE(in) << suffix;
    int lines = 0;
    for (std::string l; std::getline(in, l);) ++lines;
    EXPECT_EQ(lines, 10);  // header plus 9 vertices
    std::filesystem::remove(prefix + suffix);
  }
  EXPECT_EQ(run({"witness", "named:petersen"}).code, 1);
}

TEST(SearchSrg, CsvListsSixTuples) {
  const auto r = run({"searchsrg", "--nmax", "30", "--hmax", "3"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,k,a,c,s,t,alpha,h,classification");
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    std::size_t cut = 0;
    for (int field = 0; field < 4; ++field) cut = line.find(',', cut) + 1;
    rows.push_back(line.substr(0, cut - 1));
  }
  EXPECT_EQ(rows, (std::vector<std::string>{"5,2,0,1", "9,4,1,2", "10,3,0,1", "15,6,1,3", "16,5,0,2", "27,10,1,5"}));
}

TEST(Survey, JsonReport) {
  const auto out = temp_path("report.json");
  const auto r = run({"--out", out.string(), "--format", "json", "survey", "--check", "product", "--nmax", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const auto j = json::parse(in);
  expect_keys(j, {"campaign", "scanned", "violations", "equalities", "params", "pass"}, "survey");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["params"]["n_max"], 6);
  std::filesystem::remove(out);
}

TEST(Catalog, ListsEveryEntry) {
  const auto j = run({"--format", "json", "catalog"}).parsed();
  EXPECT_EQ(j["graphs"].size(), catalog_names().size());
  for (const auto& e : j["graphs"]) {
    expect_keys(e, {"name", "n", "m", "graph6", "kind", "k", "a", "c", "h", "geometric"}, "catalog");
    EXPECT_EQ(to_graph6(named_graph(e["name"].get<std::string>())), e["graph6"]);
  }
  const auto text = run({"catalog"}).out;
  EXPECT_NE(text.find("shrikhande"), std::string::npos);
}

TEST(Schema, StableAcrossCatalog) {
  for (const auto& name : catalog_names()) {
    const std::string in = "named:" + name;
    const auto a = run({"--format", "json", "analyze", in});
    ASSERT_EQ(a.code, 0) << name << a.err;
    const auto ja = a.parsed();
    expect_keys(ja, {"graph", "regularity", "connected", "spectrum", "walk_regularity", "hoffman_number", "srg",
                     "average", "bounds"},
                name);
    expect_keys(ja["bounds"], {"hoffman", "ratio", "classic", "neumaier", "co_edge", "triangles", "product"}, name);
    const auto c = run({"--format", "json", "color", in});
    ASSERT_EQ(c.code, 0) << name;
    expect_keys(c.parsed(), {"mode", "graph", "exact", "chi", "lower", "upper", "classes", "nodes"}, name);
    const auto h = run({"--format", "json", "color", "--mode", "hoffman", in});
    ASSERT_EQ(h.code, 0) << name;
    expect_keys(h.parsed(), {"mode", "graph", "outcome", "trivial", "reason", "classes", "certificate"}, name);
    const auto s = run({"--format", "json", "sandwich", in});
    ASSERT_EQ(s.code, 0) << name << s.err;
    expect_keys(s.parsed(), {"graph", "h", "chi_v", "chi_sv", "chi", "tol", "checks", "holds"}, name);
    EXPECT_TRUE(s.parsed()["holds"].get<bool>()) << name;
  }
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "named:nonsense"}).code, 2);
  EXPECT_EQ(run({"analyze", "g6:!!"}).code, 2);
  EXPECT_EQ(run({"analyze", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "analyze", "named:petersen"}).code, 2);
  EXPECT_EQ(run({"--tol", "0.5", "analyze", "named:petersen"}).code, 2);
  EXPECT_EQ(run({"survey", "--check", "bogus"}).code, 2);
  EXPECT_FALSE(run({"frobnicate"}).err.empty());
}

TEST(ExitCodes, DomainErrors) {
  const auto r = run({"sandwich", "named:empty(4)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("Hoffman number undefined"), std::string::npos);
  EXPECT_EQ(run({"color", "--mode", "delsarte-clique", "named:cycle(6)"}).code, 1);
}

TEST(ExitCodes, Inconclusive) {
  EXPECT_EQ(run({"--budget", "5", "color", "--mode", "hoffman", "named:complement(triangular(6))"}).code, 3);
  EXPECT_EQ(run({"--budget", "1", "color", "named:schlafli"}).code, 3);
}

TEST(Environment, OverridesDefaults) {
  ::setenv("HOFFMAN_FORMAT", "json", 1);
  const auto r = run({"analyze", "named:pentagon"});
  ::unsetenv("HOFFMAN_FORMAT");
  ASSERT_EQ(r.code, 0);
  EXPECT_NO_THROW(json::parse(r.out));
  EXPECT_ANY_THROW(json::parse(run({"analyze", "named:pentagon"}).out));
}

TEST(Help, ExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("searchsrg"), std::string::npos);
}
