#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

#include "eolab/error.hpp"
#include "test_support.hpp"

namespace eolab::cli {
namespace {

using eolab::testing::fixture;
using eolab::testing::program_fixture;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseNaturals, Lists) {
  EXPECT_EQ(parse_naturals("5,2,9"), (std::vector<Natural>{5, 2, 9}));
  EXPECT_EQ(parse_naturals("7"), (std::vector<Natural>{7}));
  EXPECT_THROW(parse_naturals(""), InvalidArgument);
  EXPECT_THROW(parse_naturals("1,,2"), InvalidArgument);
  EXPECT_THROW(parse_naturals("1,-2"), InvalidArgument);
  EXPECT_THROW(parse_naturals("1, 2"), InvalidArgument);
  EXPECT_THROW(parse_naturals("18446744073709551616"), InvalidArgument);
}

TEST(CliPattern, Text) {
  const auto r = invoke({"pattern", "5,2,9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "pattern: 1,0,2\nascents: (0,2) (1,2)\ninversions: (0,1)\n");
}

TEST(CliPattern, DuplicateIsUsageError) {
  const auto r = invoke({"pattern", "5,5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("duplicate element 5"), std::string::npos);
}

TEST(CliPattern, Json) {
  const auto r = invoke({"pattern", "7", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["pattern"], nlohmann::json::array({0}));
  EXPECT_TRUE(doc["ascents"].empty());
  // Global form before the subcommand.
  EXPECT_EQ(invoke({"--format", "json", "pattern", "7"}).out, r.out);
}

TEST(CliCmp, Verdicts) {
  auto r = invoke({"cmp", "--left", "3,1,4", "--right", "30,10,40"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: equivalent (uniform)"), std::string::npos);

  r = invoke({"cmp", "--left", "1,2", "--right", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: right ≤eo left only"), std::string::npos);
  EXPECT_NE(r.out.find("violating pair (0,1)"), std::string::npos);

  r = invoke({"cmp", "--left", "0,2,1", "--right", "1,0,2"});
  EXPECT_NE(r.out.find("verdict: incomparable"), std::string::npos);

  r = invoke({"cmp", "--left", "0,1", "--right", "0,1,2"});
  EXPECT_EQ(r.code, 2);

  r = invoke({"cmp", "--left", "0,2,1", "--right", "1,0,2", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "incomparable");
  EXPECT_EQ(doc["leftLeqRightViolation"], nlohmann::json::array({0, 1}));
}

TEST(CliPoset, ExportAndStructures) {
  auto r = invoke({"poset", "--n", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["nodes"].size(), 6u);
  EXPECT_EQ(doc["hasse"].size(), 6u);

  r = invoke({"poset", "--n", "3", "--chain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2,1,0\n2,0,1\n1,0,2\n0,1,2\n"), std::string::npos);

  r = invoke({"poset", "--n", "2", "--antichain", "2"});
  EXPECT_EQ(r.code, 3);

  r = invoke({"poset", "--n", "7"});
  EXPECT_EQ(r.code, 2);
  r = invoke({"poset", "--n", "9", "--cap", "9"});
  EXPECT_EQ(r.code, 2);

  r = invoke({"poset", "--n", "2"});
  EXPECT_NE(r.out.find("\"10\" -> \"01\""), std::string::npos);
  EXPECT_EQ(r.out, invoke({"poset", "--n", "2"}).out);
}

TEST(CliRun, Programs) {
  auto r = invoke({"run", "--program", program_fixture("evens"), "--k", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("emitted: 0,2,4,6,8\npattern: 0,1,2,3,4\n"), std::string::npos);
  EXPECT_NE(r.out.find("truncated: false"), std::string::npos);

  r = invoke({"run", "--program", program_fixture("odds_fast"), "--k", "6", "--round-cap", "200",
              "--format", "json"});
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["emitted"], nlohmann::json::array({1, 3, 5, 7, 9, 11}));

  r = invoke({"run", "--program", fixture("malformed.json")});
  EXPECT_EQ(r.code, 2);
  r = invoke({"run", "--program", fixture("bad_identifier.json")});
  EXPECT_EQ(r.code, 2);
  r = invoke({"run", "--program", fixture("overflow.json")});
  EXPECT_EQ(r.code, 4);

  r = invoke({"run", "--program", program_fixture("countdown"), "--k", "4", "--schedule",
              "min_first", "--window", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["emitted"], nlohmann::json::array({20, 19, 21, 18}));
  EXPECT_EQ(doc["schedule"]["listing"], nlohmann::json::array({19, 20, 18, 21}));

  r = invoke({"run", "--program", program_fixture("odds_fast"), "--k", "60", "--round-cap", "50",
              "--schedule", "native"});
  EXPECT_EQ(r.code, 4);
}

TEST(CliSearch, ExitCodes) {
  const auto evens = program_fixture("evens");
  auto r = invoke({"search", "--a", evens, "--b", evens, "--k", "5", "--window", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("choicesA: 0,0,0,0,0\nchoicesB: 0,0,0,0,0"), std::string::npos);

  r = invoke({"search", "--a", evens, "--b", program_fixture("countdown"), "--k", "4",
              "--window", "4", "--relation", "uniform"});
  EXPECT_EQ(r.code, 0);

  r = invoke({"search", "--a", evens, "--b", program_fixture("swapped_pairs"), "--k", "4",
              "--window", "1"});
  EXPECT_EQ(r.code, 3);

  r = invoke({"search", "--a", evens, "--b", program_fixture("countdown"), "--k", "8",
              "--window", "2", "--relation", "uniform", "--max-nodes", "5", "--format", "json"});
  EXPECT_EQ(r.code, 5);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "budget_exceeded");

  r = invoke({"search", "--a", program_fixture("odds_fast"), "--b", evens, "--k", "60",
              "--round-cap", "50"});
  EXPECT_EQ(r.code, 4);
}

TEST(CliCheck, Suites) {
  EXPECT_EQ(invoke({"check", "--suite", "theorem10", "--n", "5"}).code, 0);
  EXPECT_EQ(invoke({"check", "--suite", "preorder", "--n", "6"}).code, 2);
  const auto r = invoke({"check", "--suite", "theorem3", "--n", "3", "--support", "4,8,15",
                         "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["checked"], 6);
  EXPECT_EQ(invoke({"check", "--suite", "theorem3", "--n", "3", "--support", "4,8"}).code, 2);
  EXPECT_EQ(invoke({"check", "--suite", "bogus", "--n", "3"}).code, 2);
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"pattern", "1,2", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

}  // namespace
}  // namespace eolab::cli
