#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;
using walkinv::cli::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto p = std::filesystem::temp_directory_path() / ("walkinv_cli_test_" + name);
  std::ofstream(p, std::ios::binary) << contents;
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, InvariantsOfPath3) {
  const auto file = temp_file("p3.txt", "3 2\n0 1\n1 2\n");
  const CliRun r = run({"invariants", file.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "invariants");
  EXPECT_EQ(j["results"]["global"]["W"], "4");
  EXPECT_EQ(j["results"]["costs"]["kemeny"], j["results"]["global"]["K_pi2"]);
  EXPECT_EQ(j["summary"]["passed"], true);
  EXPECT_TRUE(j["timing"]["seconds"].is_number());
}

TEST(Cli, InvariantsOfK2) {
  const auto file = temp_file("k2.txt", "2 1\n0 1\n");
  const CliRun r = run({"invariants", file.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["results"]["costs"]["cc"], json({"1", "1"}));
}

TEST(Cli, MalformedInputIsExitTwoWithLineNumber) {
  const auto file = temp_file("bad.txt", "3 2\n0 1\na b\n");
  const CliRun r = run({"invariants", file.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, DisconnectedAndMissingInputsAreExitTwo) {
  const auto file = temp_file("disc.txt", "4 2\n0 1\n2 3\n");
  EXPECT_EQ(run({"invariants", file.string()}).code, 2);
  EXPECT_EQ(run({"invariants", "/nonexistent/graph.txt"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "bogus", "--max-n", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "trees", "--max-n", "12"}).code, 2);
  EXPECT_EQ(run({"scaling", "--sizes", "1"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, VerifySuitesPassAtSmallOrders) {
  for (const std::string suite : {"trees", "graphs", "spectral", "extremal"}) {
    const CliRun r = run({"verify", "--suite", suite, "--max-n", "4", "--random-count", "3", "--random-max-n", "6"});
    ASSERT_EQ(r.code, 0) << suite << "\n" << r.err;
    EXPECT_EQ(json::parse(r.out)["summary"]["passed"], true) << suite;
  }
  const CliRun ce = run({"verify", "--suite", "counterexamples", "--max-n", "7"});
  EXPECT_EQ(ce.code, 0) << ce.err;
  const CliRun mc = run({"verify", "--suite", "montecarlo", "--max-n", "5", "--walks", "3000"});
  EXPECT_EQ(mc.code, 0) << mc.err;
}

TEST(Cli, MissingCounterexamplesFailUnlessInconclusiveAllowed) {
  // n <= 3 has no exhaustive witness; the brush fallback covers only one mode.
  const CliRun strict = run({"verify", "--suite", "counterexamples", "--max-n", "3"});
  const CliRun lenient = run({"verify", "--suite", "counterexamples", "--max-n", "3", "--allow-inconclusive"});
  EXPECT_EQ(strict.code, 1);
  EXPECT_EQ(lenient.code, 0);
  EXPECT_EQ(json::parse(lenient.out)["results"][0]["inconclusive"], true);
}

TEST(Cli, JsonFileRoundTripsByteIdentically) {
  const auto path = std::filesystem::temp_directory_path() / "walkinv_cli_test_verify.json";
  const CliRun r = run({"verify", "--suite", "extremal", "--max-n", "4", "--json", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "verify: PASS (" + path.string() + ")\n");
  const std::string text = slurp(path);
  EXPECT_EQ(json::parse(text).dump(2) + "\n", text);
}

TEST(Cli, ScalingCsvRowsAndDeterminism) {
  const std::vector<std::string> args{"scaling", "--sizes", "8,16,32", "--samples", "20", "--seed", "5"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 4);
}

TEST(Cli, ScalingWritesCsvAndJsonFiles) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = dir / "walkinv_cli_test_scaling.csv";
  const auto js = dir / "walkinv_cli_test_scaling.json";
  const CliRun r = run({"scaling", "--sizes", "8,16", "--samples", "10", "--csv", csv.string(), "--json", js.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("scaling: 2 rows", 0), 0u) << r.out;
  EXPECT_EQ(slurp(csv).rfind("n,samples,", 0), 0u);
  const json j = json::parse(slurp(js));
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_TRUE(j["summary"].contains("cc_norm_spread"));
}
