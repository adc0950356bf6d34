#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xoverlab/cli.hpp"
#include "xoverlab/verify.hpp"

namespace {

using json = nlohmann::json;
using xoverlab::capture;
using xoverlab::run;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

TEST(Cli, RSetJsonCarriesHeaderAndMembers) {
  const auto doc = json::parse(capture({"rset", "-k", "2", "-x", "0000", "-y", "1111"}));
  EXPECT_EQ(doc["tool_version"], xoverlab::kToolVersion);
  EXPECT_EQ(doc["config"]["budget"], 1048576);
  EXPECT_EQ(doc["config"]["format"], "json");
  EXPECT_EQ(doc["config"]["seed"], 0);
  EXPECT_EQ(doc["command"]["name"], "rset");
  EXPECT_EQ(doc["result"]["size"], 14);
  EXPECT_EQ(doc["result"]["members"].size(), 14u);
  EXPECT_EQ(doc["result"]["distance"], 4);
  EXPECT_EQ(doc["result"]["closed"], false);
  EXPECT_EQ(doc["result"]["members"].front(), "0000");
}

TEST(Cli, RSetTableHasOneRowPerMember) {
  const auto text = capture({"rset", "-k", "2", "-x", "00000", "-y", "11111", "--format", "table"});
  std::istringstream in(text);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) rows += !line.empty() && line[0] != '#';
  EXPECT_EQ(rows, 22u);
}

TEST(Cli, TrivialRSet) {
  const auto doc = json::parse(capture({"rset", "-k", "1", "-x", "0", "-y", "1", "--spec", "2"}));
  EXPECT_EQ(doc["result"]["members"], json::parse(R"(["0","1"])"));
  EXPECT_EQ(doc["config"]["spec"], "2");
}

TEST(Cli, ClosureReportsInterval) {
  const auto doc = json::parse(capture({"closure", "-k", "1", "-x", "0101", "-y", "1010"}));
  EXPECT_EQ(doc["result"]["size"], 16);
  EXPECT_EQ(doc["result"]["equals_interval"], true);
}

TEST(Cli, AxiomVerdicts) {
  auto report = [](std::vector<std::string> args) {
    return json::parse(capture(args))["result"]["reports"][0];
  };
  EXPECT_EQ(report({"axioms", "--source", "rset:1", "--spec", "2^4", "--check", "Pa"})["holds"], true);
  const auto b2 = report({"axioms", "--source", "rset:2", "--spec", "2^4", "--check", "B2"});
  EXPECT_EQ(b2["holds"], false);
  EXPECT_EQ(b2["witness"].size(), 3u);
  EXPECT_EQ(report({"axioms", "--source", "closure:1", "--spec", "3,3", "--check", "MO"})["holds"], false);
  EXPECT_EQ(report({"axioms", "--source", "interval", "--spec", "2^3", "--check", "M"})["holds"], true);
}

TEST(Cli, AxiomErrors) {
  const auto unknown = invoke({"axioms", "--source", "rset:1", "--spec", "2^3", "--check", "ZZ"});
  EXPECT_NE(unknown.status, 0);
  EXPECT_NE(unknown.err.find("GW3"), std::string::npos);
  EXPECT_NE(invoke({"axioms", "--source", "rset", "--spec", "2^3"}).status, 0);
  EXPECT_NE(invoke({"axioms", "--source", "rset:1"}).status, 0);
}

TEST(Cli, GraphStatisticsForTwoPoints) {
  const auto doc = json::parse(capture({"graph", "-k", "2", "-x", "00000", "-y", "11111"}));
  const auto& stats = doc["result"]["stats"];
  EXPECT_EQ(stats["vertex_count"], 22);
  EXPECT_EQ(stats["edge_count"], 40);
  EXPECT_EQ(stats["quadrangles"], 20);
  EXPECT_EQ(stats["cut_sizes"], json::parse("[8,8,8,8,8]"));
  EXPECT_EQ(stats["degree_histogram"], json::parse(R"({"3":10,"4":10,"5":2})"));
  EXPECT_EQ(stats["antipodal_map_is_swap"], true);
  EXPECT_EQ(stats["vc_dimension"], 3);
  EXPECT_EQ(doc["result"]["r2_expected"]["matches"], true);
}

TEST(Cli, OnePointGraphIsACycle) {
  const auto doc = json::parse(capture({"graph", "-k", "1", "-x", "000", "-y", "111"}));
  const auto& stats = doc["result"]["stats"];
  EXPECT_EQ(stats["vertex_count"], 6);
  EXPECT_EQ(stats["edge_count"], 6);
  EXPECT_EQ(stats["degree_histogram"], json::parse(R"({"2":6})"));
  EXPECT_FALSE(doc["result"].contains("r2_expected"));
}

TEST(Cli, GraphDotColorsCuts) {
  const auto dot = capture({"graph", "-k", "2", "-x", "0000", "-y", "1111", "--format", "dot"});
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find(" -- ") != std::string::npos) {
      ++edges;
      EXPECT_NE(line.find("color="), std::string::npos);
    } else if (line.rfind("  \"", 0) == 0) {
      ++nodes;
    }
  }
  EXPECT_EQ(nodes, 14u);
  EXPECT_EQ(edges, 24u);
}

TEST(Cli, OrientedMatroidSummary) {
  const auto lattice = std::filesystem::temp_directory_path() / "xoverlab_cli_test_lattice.dot";
  std::filesystem::remove(lattice);
  const auto doc = json::parse(capture({"om", "-k", "2", "-n", "4", "--lattice", lattice.string()}));
  const auto& r = doc["result"];
  EXPECT_EQ(r["rank"], 3);
  EXPECT_EQ(r["tope_count"], 14);
  EXPECT_EQ(r["cocircuit_count"], 12);
  EXPECT_EQ(r["uniform"], true);
  EXPECT_EQ(r["uniform_tope_check"]["holds"], true);
  EXPECT_EQ(r["cocircuit_formulas"]["matches_two_binom_n_k_minus_1"], false);
  const auto dot = slurp(lattice);
  EXPECT_EQ(dot.rfind("graph \"face_lattice\"", 0), 0u);
  EXPECT_EQ(dot, capture({"om", "-k", "2", "-n", "4", "--format", "dot"}));
  std::filesystem::remove(lattice);

  const auto five = json::parse(capture({"om", "-k", "2", "-n", "5"}))["result"];
  EXPECT_EQ(five["tope_count"], 22);
  EXPECT_EQ(five["cocircuit_count"], 20);
  const auto three = json::parse(capture({"om", "-k", "1", "-n", "3"}))["result"];
  EXPECT_EQ(three["rank"], 2);
  EXPECT_EQ(three["tope_count"], 6);
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "xoverlab_cli_test_out.json";
  const auto r = invoke({"rset", "-k", "1", "-x", "01", "-y", "10", "--out", path.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(slurp(path))["result"]["size"], 4);
  std::filesystem::remove(path);
}

TEST(Cli, ErrorsAreReported) {
  const auto parse = invoke({"rset", "-k", "1", "-x", "01a1", "-y", "1111"});
  EXPECT_NE(parse.status, 0);
  EXPECT_NE(parse.err.find("position 2"), std::string::npos);

  const auto budget = invoke({"closure", "-k", "1", "-x", "000000000000", "-y", "111111111111",
                              "--budget", "100"});
  EXPECT_NE(budget.status, 0);
  EXPECT_NE(budget.err.find("space too large"), std::string::npos);

  EXPECT_NE(invoke({"verify", "nosuch"}).status, 0);
  EXPECT_NE(invoke({"frobnicate"}).status, 0);
  EXPECT_NE(invoke({"rset", "-k", "1", "-x", "01", "-y", "10", "--format", "svg"}).status, 0);
  EXPECT_NE(invoke({"axioms", "--source", "rset:1", "--spec", "2^3", "--format", "dot"}).status, 0);
  EXPECT_THROW(capture({"verify", "nosuch"}), std::runtime_error);
}

TEST(Cli, VerifyExitStatusReflectsSuite) {
  const auto r = invoke({"verify", "r2", "--t", "4..5"});
  EXPECT_EQ(r.status, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["passed"], true);
  EXPECT_EQ(doc["result"]["criteria"].size(), 2u);
  EXPECT_NE(invoke({"verify", "r2", "--t", "5..4"}).status, 0);
}

TEST(Cli, OmVerifyFlagsCountDiscrepancy) {
  const auto doc = json::parse(capture({"verify", "om", "--max-n", "5"}));
  EXPECT_EQ(doc["result"]["passed"], true);
  ASSERT_EQ(doc["result"]["notes"].size(), 1u);
  EXPECT_NE(doc["result"]["notes"][0].get<std::string>().find("2*C(n,k-1)"), std::string::npos);
}

TEST(Cli, SeedChangesOnlySampledSuites) {
  const auto a = json::parse(capture({"verify", "axioms", "--seed", "1"}));
  const auto b = json::parse(capture({"verify", "axioms", "--seed", "2"}));
  EXPECT_EQ(a["result"]["passed"], true);
  EXPECT_EQ(b["result"]["passed"], true);
  EXPECT_EQ(capture({"rset", "-k", "1", "-x", "01", "-y", "10", "--seed", "5"}).find("\"seed\": 5") !=
                std::string::npos,
            true);
}

TEST(Golden, InProcessOutputsMatch) {
  for (const auto& c : xoverlab::golden_cases()) {
    const auto path = std::filesystem::path(XOVER_GOLDEN_DIR) / (c.name + ".txt");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(capture(c.args), slurp(path)) << c.name;
  }
}

}  // namespace
