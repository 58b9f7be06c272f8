#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ffhyper/cli.hpp"
#include "json.hpp"

using namespace ffhyper;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ffhyper");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TraceAllMethods) {
  const auto r = run({"trace", "--p", "5", "--e", "1", "--a", "1", "--b", "0", "--method", "all", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["naive_trace"], 2);
  EXPECT_TRUE(j["agreement"].get<bool>());
  std::map<std::string, nlohmann::json> by_method;
  for (const auto& rep : j["reports"]) by_method[rep["method"]] = rep;
  EXPECT_EQ(by_method["naive"]["trace"], 2);
  EXPECT_EQ(by_method["thm_1_2"]["trace"], 2);
  EXPECT_EQ(by_method["thm_1_1"]["status"], "skipped");
  EXPECT_EQ(by_method["thm_1_1"]["reason"], "WrongCongruence");
}

TEST(Cli, TraceTextOutput) {
  const auto r = run({"trace", "--p", "7", "--a", "0", "--b", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("naive: a_q = -4"), std::string::npos) << r.out;
}

TEST(Cli, ExtensionFieldCoefficients) {
  const auto r = run({"trace", "--p", "5", "--e", "2", "--a", "1,1", "--b", "0,2", "--method", "naive", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["field"]["q"], 25);
}

TEST(Cli, InapplicableSingleMethodExitsTwo) {
  const auto r = run({"trace", "--p", "11", "--a", "1", "--b", "2", "--method", "thm1"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("WrongCongruence"), std::string::npos);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run({"trace", "--p", "10", "--a", "1", "--b", "2"}).code, kExitInvalid);
  EXPECT_EQ(run({"trace", "--p", "7", "--a", "x", "--b", "2"}).code, kExitInvalid);
  EXPECT_EQ(run({"trace", "--p", "7", "--a", "9", "--b", "2"}).code, kExitInvalid);
  EXPECT_EQ(run({"trace", "--p", "7", "--a", "1", "--b", "2", "--method", "bogus"}).code, kExitInvalid);
  EXPECT_EQ(run({"verify", "--q-min", "2"}).code, kExitInvalid);
  EXPECT_EQ(run({"verify", "--sampling", "random"}).code, kExitInvalid);
  EXPECT_EQ(run({"nonsense"}).code, kExitInvalid);
  EXPECT_EQ(run({}).code, kExitInvalid);
}

TEST(Cli, VerifyModFourSweep) {
  const auto r = run({"verify", "--congruence", "mod4", "--q-max", "100", "--sampling", "exhaustive",
                      "--format", "json", "--records", "none"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_GT(j["summary"]["passed"].get<int>(), 0);
  EXPECT_TRUE(j["summary"]["coverage_complete"].get<bool>());
}

TEST(Cli, VerifyWritesReportFileToEnvironmentDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "ffhyper_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  const auto r = run({"verify", "--congruence", "mod6", "--q-max", "13", "--format", "csv"});
  ::unsetenv(kOutputDirEnv);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto path = dir / "verify_report.csv";
  ASSERT_TRUE(std::filesystem::exists(path));
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("q,p,e,theorem", 0), 0u);

  const auto explicit_path = dir / "explicit.json";
  const auto r2 = run({"identities", "--q-max", "13", "--format", "json", "--output", explicit_path.string()});
  ASSERT_EQ(r2.code, kExitOk) << r2.err;
  ASSERT_TRUE(std::filesystem::exists(explicit_path));
  std::filesystem::remove_all(dir);
}

TEST(Cli, IdentitiesAndBench) {
  const auto r = run({"identities", "--q-max", "30", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto b = run({"bench", "--q", "200", "--reps", "1", "--format", "json"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  const auto j = nlohmann::json::parse(b.out);
  EXPECT_FALSE(j.empty());
}
