#include "chordexp/cli.hpp"
#include "chordexp/json_io.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace chordexp;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("chordexp_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, EnumerateBoth) {
  const CliRun r = run({"enumerate", "--n", "4", "--method", "both"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("count=27"), std::string::npos);
  EXPECT_NE(r.out.find("sets_agree=yes"), std::string::npos);
}

TEST(Cli, EnumerateJson) {
  const CliRun r = run({"enumerate", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.code, exit_ok);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["count"], 4);
  ASSERT_EQ(j["diagrams"].size(), 4u);
  for (const auto& d : j["diagrams"]) {
    EXPECT_EQ(d["n"], 3);
    EXPECT_TRUE(diagram_from_json(d).is_connected());
    EXPECT_TRUE(d.contains("b"));
  }
}

TEST(Cli, OutputIsStable) {
  const std::vector<std::string> args{"table", "--n", "4", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, CountOnly) {
  const CliRun r = run({"enumerate", "--n", "7", "--count-only"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("count=38232"), std::string::npos);
}

TEST(Cli, LimitsAreUsageErrors) {
  EXPECT_EQ(run({"enumerate", "--n", "8", "--method", "bruteforce"}).code, exit_usage);
  EXPECT_EQ(run({"enumerate", "--n", "10"}).code, exit_usage);
  EXPECT_EQ(run({"--bruteforce-limit", "3", "enumerate", "--n", "4", "--method", "bruteforce"}).code, exit_usage);
  EXPECT_EQ(run({"--constructive-limit", "3", "enumerate", "--n", "4"}).code, exit_usage);
}

TEST(Cli, EnvironmentLimit) {
  ::setenv("CHORDEXP_BRUTEFORCE_LIMIT", "3", 1);
  const int code = run({"enumerate", "--n", "4", "--method", "bruteforce"}).code;
  ::unsetenv("CHORDEXP_BRUTEFORCE_LIMIT");
  EXPECT_EQ(code, exit_usage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(run({"enumerate"}).code, exit_usage);
  EXPECT_EQ(run({"enumerate", "--n", "3", "--method", "magic"}).code, exit_usage);
  EXPECT_EQ(run({"gamma", "--k", "0"}).code, exit_usage);
  EXPECT_EQ(run({"gevrey", "--c", "-1", "--k", "1"}).code, exit_usage);
  EXPECT_EQ(run({"gevrey", "--c", "x", "--k", "1"}).code, exit_usage);
  EXPECT_EQ(run({"verify"}).code, exit_usage);
  EXPECT_EQ(run({"enumerate", "--help"}).code, exit_ok);
}

TEST(Cli, GammaLinearTerm) {
  const CliRun r = run({"gamma", "--k", "1", "--order", "1"});
  ASSERT_EQ(r.code, exit_ok);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["order"], 1);
  const Json& terms = j["coeffs"]["1"];
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0]["m"], Json({{"0", 1}}));
  EXPECT_EQ(terms[0]["c"], "-1");
}

TEST(Cli, GammaWithValues) {
  const auto path = temp_file("fvals.json");
  std::ofstream(path) << R"({"0": "1/2", "1": 1, "2": "3"})";
  const CliRun r = run({"gamma", "--k", "1", "--order", "3", "--fvals", path.string()});
  ASSERT_EQ(r.code, exit_ok);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["values"]["1"], "-1/2");
  EXPECT_EQ(j["values"]["2"], "-1/2");
  // -(3 f0^2 f2 + f0 f1^2)
  EXPECT_EQ(j["values"]["3"], "-11/4");
  std::ofstream(path) << R"({"0": "1"})";
  EXPECT_EQ(run({"gamma", "--k", "1", "--order", "3", "--fvals", path.string()}).code, exit_usage);
  std::filesystem::remove(path);
}

TEST(Cli, Table) {
  const CliRun r = run({"table", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.code, exit_ok);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 6u);
  const auto golden = fixtures::table_up_to_three();
  for (const auto& [pairing, tree] : golden) {
    bool found = false;
    for (const auto& rec : j)
      if (rec["pairing"] == Json(pairing)) {
        found = true;
        EXPECT_EQ(tree_from_json(rec["tree"]).to_string(), tree);
      }
    EXPECT_TRUE(found) << tree;
  }
}

TEST(Cli, VerifyCommands) {
  EXPECT_EQ(run({"verify", "dse", "--order", "4"}).code, exit_ok);
  EXPECT_EQ(run({"verify", "recurrences", "--order", "5"}).code, exit_ok);
  EXPECT_EQ(run({"verify", "bijection", "--n", "4"}).code, exit_ok);
  EXPECT_EQ(run({"verify", "lemmas", "--n", "4"}).code, exit_ok);
}

TEST(Cli, VerifyReport) {
  const auto path = temp_file("report.json");
  ASSERT_EQ(run({"verify", "lemmas", "--n", "4", "--report", path.string()}).code, exit_ok);
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"].size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, FourTerm) {
  const auto path = temp_file("fourterm.json");
  const CliRun r = run({"fourterm", "--n", "4", "--alpha", "1", "--report", path.string()});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("configurations=28"), std::string::npos);
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_GT(j["nonzero"].get<int>(), 0);
  EXPECT_EQ(j["violations"].size(), j["nonzero"].get<std::size_t>());
  std::filesystem::remove(path);
}

TEST(Cli, Gevrey) {
  const CliRun r = run({"gevrey", "--c", "2", "--k", "2", "--order", "6"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Json, DiagramRoundTrip) {
  const ChordDiagram c({3, 5, 1, 6, 2, 4});
  const Json j = to_json(c);
  EXPECT_EQ(j.dump(), R"({"n":3,"pairing":[3,5,1,6,2,4]})");
  EXPECT_EQ(diagram_from_json(j), c);
  EXPECT_THROW(diagram_from_json(Json{{"n", 2}, {"pairing", {3, 5, 1, 6, 2, 4}}}), std::invalid_argument);
  EXPECT_THROW(diagram_from_json(Json{{"pairing", {1, 1}}}), std::invalid_argument);
  EXPECT_THROW(diagram_from_json(Json::array()), std::invalid_argument);
}

TEST(Json, StatsFields) {
  const ChordDiagram c = fixtures::worked_example();
  const Json j = to_json(c, stats(c));
  EXPECT_EQ(j["sigma"], Json({1, 2, 4, 3}));
  EXPECT_EQ(j["terminal"], Json({3, 4}));
  EXPECT_EQ(j["b"], 3);
  EXPECT_EQ(j["delta"], Json({1}));
  EXPECT_EQ(j["delta_bar"], Json({0, 0, 1}));
  EXPECT_EQ(j["monomial"], Json({{"0", 2}, {"1", 1}}));
}

TEST(Json, TreeAndPolynomial) {
  const LabeledTree t = LabeledTree::parse("((1,3),2)");
  const Json j = to_json(t);
  EXPECT_EQ(j.dump(), R"({"left":{"left":{"leaf":1},"right":{"leaf":3}},"right":{"leaf":2}})");
  EXPECT_EQ(tree_from_json(j), t);
  EXPECT_THROW(tree_from_json(Json{{"left", {{"leaf", 1}}}}), std::invalid_argument);

  const FPolynomial p = FPolynomial::symbol(0) * FPolynomial::symbol(1) * Rational(-3, 4) + FPolynomial(Rational(2));
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  EXPECT_THROW(polynomial_from_json(Json{{"m", 1}}), std::invalid_argument);

  const SymbolValues v = symbol_values_from_json(Json::parse(R"({"0": "1/2", "3": 4})"));
  EXPECT_EQ(v.at(0), Rational(1, 2));
  EXPECT_EQ(v.at(3), Rational(4));
  EXPECT_THROW(symbol_values_from_json(Json::parse(R"({"a": 1})")), std::invalid_argument);
}

TEST(Json, SeriesOmitsZeros) {
  XSeries s(3);
  s.set_coefficient(2, FPolynomial::symbol(0));
  const Json j = to_json(s);
  EXPECT_EQ(j["order"], 3);
  EXPECT_EQ(j["coeffs"].size(), 1u);
  EXPECT_EQ(j["coeffs"]["2"][0]["c"], "1");
}
