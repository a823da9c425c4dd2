#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace contra::cli {
namespace {

using json = nlohmann::json;

constexpr const char* kC5 = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
constexpr const char* kC4 = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
constexpr const char* kP6 = "p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_with(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "contra");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json strip_timing(json j) {
  j.erase("elapsed_ms");
  return j;
}

TEST(Cli, SolveConnectedVertexCover) {
  Outcome o = run_with({"solve", "--kind", "vc", "--connected", "--format", "json"}, kC5);
  ASSERT_EQ(o.code, kExitOk) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j["size"], 4);
  EXPECT_EQ(j["connected"], true);
  EXPECT_EQ(j["solution"], json::parse("[1,2,3,4]"));
}

TEST(Cli, SolvePlainAndPadBudget) {
  Outcome fvs = run_with({"solve", "--kind", "oct", "--format", "json"}, kC5);
  ASSERT_EQ(fvs.code, kExitOk);
  EXPECT_EQ(json::parse(fvs.out)["size"], 1);

  Outcome padded = run_with({"solve", "--kind", "vc", "--connected", "--pad-budget", "6", "--format", "json"}, kP6);
  ASSERT_EQ(padded.code, kExitOk) << padded.err;
  EXPECT_EQ(json::parse(padded.out)["size"], 4);

  Outcome serial =
      run_with({"solve", "--kind", "vc", "--connected", "--pad-budget", "6", "--serial", "--format", "json"}, kP6);
  EXPECT_EQ(strip_timing(json::parse(serial.out)), strip_timing(json::parse(padded.out)));
}

TEST(Cli, JsonStableAcrossRuns) {
  std::vector<std::string> args = {"solve", "--kind", "fvs", "--connected", "--format", "json"};
  Outcome a = run_with(args, kC5);
  Outcome b = run_with(args, kC5);
  EXPECT_EQ(strip_timing(json::parse(a.out)), strip_timing(json::parse(b.out)));
}

TEST(Cli, AutoBudgetRejectsInducedMatching) {
  Outcome o = run_with({"solve", "--kind", "vc", "--connected"}, kP6);
  EXPECT_EQ(o.code, kExitRejected);
  EXPECT_NE(o.err.find("induced"), std::string::npos);
}

TEST(Cli, DisconnectedRejected) {
  Outcome o = run_with({"solve", "--kind", "vc", "--connected", "--pad-budget", "3"}, "p edge 4 2\ne 1 2\ne 3 4\n");
  EXPECT_EQ(o.code, kExitRejected);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_with({}).code, kExitUsage);
  EXPECT_EQ(run_with({"solve"}, kC5).code, kExitUsage);
  EXPECT_EQ(run_with({"solve", "--kind", "xyz"}, kC5).code, kExitUsage);
  EXPECT_EQ(run_with({"solve", "--kind", "vc", "--pad-budget", "-1"}, kC5).code, kExitUsage);
  EXPECT_EQ(run_with({"solve", "--kind", "vc", "--s", "0"}, kC5).code, kExitUsage);
  EXPECT_EQ(run_with({"verify", "--gadget", "oct-line", "--oracle-ceiling", "25"}, kC5).code, kExitUsage);
  EXPECT_EQ(run_with({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_with({"--help"}).code, kExitOk);
}

TEST(Cli, ParseErrorsAreRejections) {
  Outcome o = run_with({"solve", "--kind", "vc"}, "p edge 3 1\ne 1 9\n");
  EXPECT_EQ(o.code, kExitRejected);
  EXPECT_NE(o.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run_with({"solve", "--kind", "vc", "--input", "/nonexistent/graph.txt"}).code, kExitRejected);
}

TEST(Cli, Enumerate) {
  Outcome o = run_with({"enumerate", "--kind", "mis", "--format", "json"}, kC5);
  ASSERT_EQ(o.code, kExitOk);
  json j = json::parse(o.out);
  EXPECT_EQ(j["count"], 5);
  EXPECT_EQ(j["kind"], "mis");

  Outcome human = run_with({"enumerate", "--kind", "fvs"}, kC4);
  EXPECT_NE(human.out.find("c count 4"), std::string::npos);
}

TEST(Cli, GadgetAndVerify) {
  Outcome g = run_with({"gadget", "--name", "coct-line", "--format", "json"}, kC4);
  ASSERT_EQ(g.code, kExitOk);
  json j = json::parse(g.out);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["budget_k"], 4);

  Outcome v = run_with({"verify", "--gadget", "cfvs-girth", "--p", "4", "--k", "2", "--format", "json"}, kC4);
  ASSERT_EQ(v.code, kExitOk) << v.err;
  EXPECT_EQ(json::parse(v.out)["holds"], true);

  Outcome bad = run_with({"gadget", "--name", "cfvs-girth", "--p", "5"}, kC4);
  EXPECT_EQ(bad.code, kExitRejected);
  EXPECT_EQ(run_with({"gadget", "--name", "nope"}, kC4).code, kExitUsage);
}

TEST(Cli, GenAndCheck) {
  Outcome gen = run_with({"gen", "--family", "complete-multipartite", "--parts", "2,2,2"});
  ASSERT_EQ(gen.code, kExitOk);
  Outcome check = run_with({"check", "--property", "sp2free", "--s", "2", "--format", "json"}, gen.out);
  ASSERT_EQ(check.code, kExitOk) << check.err;
  EXPECT_EQ(json::parse(check.out)["holds"], true);

  Outcome random = run_with({"gen", "--family", "random-filtered-sP2free", "--n", "10", "--s", "2", "--count", "3",
                             "--seed", "7", "--format", "json"});
  ASSERT_EQ(random.code, kExitOk);
  json graphs = json::parse(random.out);
  EXPECT_EQ(graphs.size(), 3U);
  for (const auto& g : graphs) EXPECT_EQ(g["sp2_free_s"], 2);
  EXPECT_EQ(run_with({"gen", "--family", "random-filtered-sP2free", "--n", "10", "--s", "2", "--count", "3",
                      "--seed", "7", "--format", "json"})
                .out,
            random.out);

  Outcome girth = run_with({"check", "--property", "girth", "--format", "json"}, kC5);
  EXPECT_EQ(json::parse(girth.out)["girth"], 5);
  Outcome claw = run_with({"check", "--property", "claw-free"}, "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
  EXPECT_NE(claw.out.find("no"), std::string::npos);
  Outcome p6 = run_with({"check", "--property", "sp2free", "--format", "json"}, kP6);
  EXPECT_EQ(json::parse(p6.out)["holds"], false);
  EXPECT_EQ(json::parse(p6.out)["witness"].size(), 2U);
}

}  // namespace
}  // namespace contra::cli
