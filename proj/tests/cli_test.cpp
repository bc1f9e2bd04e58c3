#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hstarlab/cli.hpp"

using namespace hstarlab;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "hstar_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliRun result;
  result.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("HSTAR_LAB_THREADS"); }
  void TearDown() override { unsetenv("HSTAR_LAB_THREADS"); }
};

}  // namespace

TEST_F(CliTest, HStarAllMethodsGolden) {
  const CliRun r = run({"hstar", "--r", "1", "--k", "2", "--n", "4", "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"spec\":{\"r\":1,\"k\":2,\"n\":4},\"method\":\"all\",\"hstar\":[1,2,1,0],"
            "\"methods\":{\"formula\":[1,2,1,0],\"enum\":[1,2,1,0],\"oracle\":[1,2,1,0]},\"agree\":true}\n");
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, HStarDefaultsToAllMethods) {
  const CliRun r = run({"hstar", "--r", "1", "--k", "1", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["hstar"], nlohmann::json::parse("[1,0,0,0,0]"));
  EXPECT_EQ(doc["agree"], true);
}

TEST_F(CliTest, HStarSingleMethodHasNoAgreeField) {
  const CliRun r = run({"hstar", "--r", "2", "--k", "3", "--n", "4", "--method", "oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"spec\":{\"r\":2,\"k\":3,\"n\":4},\"method\":\"oracle\",\"hstar\":[1,12,10,0]}\n");
}

TEST_F(CliTest, HStarCsv) {
  const CliRun r = run({"hstar", "--r", "1", "--k", "2", "--n", "4", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "method,h0,h1,h2,h3\nformula,1,2,1,0\nenum,1,2,1,0\noracle,1,2,1,0\n");
}

TEST_F(CliTest, HStarInvalidSpec) {
  const CliRun r = run({"hstar", "--r", "1", "--k", "5", "--n", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("k must be less than r*n"), std::string::npos);
  EXPECT_EQ(run({"hstar", "--r", "0", "--k", "1", "--n", "3"}).code, 1);
  EXPECT_EQ(run({"hstar", "--r", "1", "--k", "-1", "--n", "3"}).code, 1);
}

TEST_F(CliTest, HStarLargeEntriesBecomeStrings) {
  const CliRun r = run({"hstar", "--r", "3", "--k", "40", "--n", "40", "--method", "formula"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  bool any_string = false;
  for (const auto& e : doc["hstar"]) any_string = any_string || e.is_string();
  EXPECT_TRUE(any_string);
}

TEST_F(CliTest, EnumCountsRecords) {
  const CliRun r = run({"enum", "--k", "2", "--n", "4", "--d", "1"});
  EXPECT_EQ(r.code, 0);
  const auto docs = lines(r.out);
  ASSERT_EQ(docs.size(), 7u);
  EXPECT_EQ(docs.back()["summary"]["count"], 6);
  EXPECT_EQ(docs.front()["text"], "({1,2,3}_1,{4}_1)");
  EXPECT_EQ(docs.front()["winding_vector"], nlohmann::json::parse("[0,0,1,1]"));
}

TEST_F(CliTest, EnumHypersimplicialGolden) {
  const CliRun r = run({"enum", "--k", "2", "--n", "4", "--d", "1", "--r", "1", "--hypersimplicial"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"blocks\":[[1,2],[3,4]],\"gaps\":[1,1],\"d\":1,\"winding_vector\":[0,1,0,1],\"text\":\"({1,2}_1,{3,4}_1)\"}\n"
            "{\"blocks\":[[1,4],[2,3]],\"gaps\":[1,1],\"d\":1,\"winding_vector\":[1,0,1,0],\"text\":\"({1,4}_1,{2,3}_1)\"}\n"
            "{\"summary\":{\"k\":2,\"n\":4,\"d\":1,\"r\":1,\"hypersimplicial\":true,\"count\":2,\"truncated\":false}}\n");
}

TEST_F(CliTest, EnumSingleBlock) {
  const CliRun r = run({"enum", "--k", "2", "--n", "4", "--d", "0", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "({1,2,3,4}_2)\n# 1 records\n");
}

TEST_F(CliTest, EnumLimit) {
  const CliRun r = run({"enum", "--k", "2", "--n", "4", "--d", "1", "--limit", "2"});
  EXPECT_EQ(r.code, 0);
  const auto docs = lines(r.out);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs.back()["summary"]["count"], 2);
  EXPECT_EQ(docs.back()["summary"]["truncated"], true);
}

TEST_F(CliTest, EnumRejectsBadArguments) {
  EXPECT_EQ(run({"enum", "--k", "0", "--n", "4", "--d", "1"}).code, 1);
  EXPECT_EQ(run({"enum", "--k", "2", "--n", "4", "--d", "-1"}).code, 1);
  EXPECT_EQ(run({"enum", "--k", "2", "--n", "4"}).code, 1);
}

TEST_F(CliTest, VerifySuites) {
  const CliRun eq6 = run({"verify", "--suite", "eq6", "--max-n", "6"});
  EXPECT_EQ(eq6.code, 0) << eq6.out;
  EXPECT_NE(eq6.out.find("PASS eq6"), std::string::npos);
  EXPECT_EQ(eq6.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "lemma1", "--max-n", "12"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "eulerian", "--max-n", "8"}).code, 0);
}

TEST_F(CliTest, VerifyJson) {
  const CliRun r = run({"verify", "--suite", "prop2", "--max-n", "4", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto docs = lines(r.out);
  ASSERT_GE(docs.size(), 2u);
  for (std::size_t i = 0; i + 1 < docs.size(); ++i) {
    EXPECT_EQ(docs[i]["suite"], "prop2");
    EXPECT_EQ(docs[i]["passed"], true);
    EXPECT_TRUE(docs[i]["counterexample"].is_null());
  }
  EXPECT_EQ(docs.back()["summary"]["failed"], 0);
}

TEST_F(CliTest, VerifyRejectsUnknownSuite) {
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 1);
  EXPECT_EQ(run({"verify", "--max-n", "0"}).code, 1);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args{"enum", "--k", "3", "--n", "5", "--d", "2"};
  EXPECT_EQ(run(args).out, run(args).out);
  setenv("HSTAR_LAB_THREADS", "3", 1);
  const CliRun threaded = run({"hstar", "--r", "2", "--k", "5", "--n", "5"});
  unsetenv("HSTAR_LAB_THREADS");
  EXPECT_EQ(threaded.out, run({"hstar", "--r", "2", "--k", "5", "--n", "5"}).out);
}

TEST_F(CliTest, ThreadVariableMustBePositive) {
  for (const char* value : {"0", "-2", "four", ""}) {
    setenv("HSTAR_LAB_THREADS", value, 1);
    const CliRun r = run({"hstar", "--r", "1", "--k", "2", "--n", "4"});
    EXPECT_EQ(r.code, 1) << value;
    EXPECT_NE(r.err.find("HSTAR_LAB_THREADS"), std::string::npos);
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"hstar", "--k", "2", "--n", "4", "--method", "guess"}).code, 1);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("hstar"), std::string::npos);
}
