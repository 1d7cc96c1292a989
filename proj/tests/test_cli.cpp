#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using rigidq::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "rigidq");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rigidq_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, Usage) {
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"decompose", "--dynkin", "A2"}).code, 1);
  EXPECT_EQ(call({"roots"}).code, 1);
  EXPECT_EQ(call({"decompose", "--dynkin", "A2", "-d", "1,1", "--format", "xml"}).code, 1);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, Roots) {
  auto r = call({"roots", "--dynkin", "A2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("positive roots: 3"), std::string::npos);
  auto e = call({"roots", "--dynkin", "E6", "--format", "json"});
  EXPECT_EQ(rigidq::cli::Json::parse(e.out)["count"], 36);
}

TEST(Cli, InvalidInput) {
  auto path = temp_path("cycle.txt");
  write(path, "vertices 3\narrow 1 2\narrow 2 3\narrow 3 1\n");
  EXPECT_EQ(call({"roots", "--quiver", path}).code, 2);
  EXPECT_EQ(call({"roots", "--quiver", temp_path("missing.txt")}).code, 2);
  EXPECT_EQ(call({"decompose", "--dynkin", "A2", "-d", "1,-1"}).code, 2);
  EXPECT_EQ(call({"decompose", "--dynkin", "A2", "-d", "1,1,1"}).code, 2);
  EXPECT_EQ(call({"decompose", "--dynkin", "D4", "-d", "1,1,1,1", "--mode", "verbatim"}).code, 2);
}

TEST(Cli, DecomposeJson) {
  auto r = call({"decompose", "--dynkin", "A2", "-d", "2,1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = rigidq::cli::Json::parse(r.out);
  EXPECT_EQ(j["summands"].size(), 2u);
  EXPECT_TRUE(j["checks"]["sum"].get<bool>());
  EXPECT_TRUE(j["checks"]["ext_free"].get<bool>());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"quiver", "d", "summands", "checks", "discrepancies"}));

  auto zero = rigidq::cli::Json::parse(call({"decompose", "--dynkin", "A3", "-d", "0,0,0", "--format", "json"}).out);
  EXPECT_TRUE(zero["summands"].empty());
}

TEST(Cli, DecomposeDiscrepancies) {
  auto r = call({"decompose", "--dynkin", "A3:><", "-d", "1,2,1", "--format", "json"});
  auto j = rigidq::cli::Json::parse(r.out);
  ASSERT_FALSE(j["discrepancies"].empty());
  bool witness = false;
  for (const auto& x : j["discrepancies"]) witness = witness || (x["i"] == 2 && x["j"] == 2);
  EXPECT_TRUE(witness);
  // The verbatim closed form is not a valid decomposition here.
  EXPECT_EQ(call({"decompose", "--dynkin", "A3:><", "-d", "1,1,1", "--mode", "verbatim"}).code, 3);
}

TEST(Cli, VerifyDefaults) {
  auto r = call({"verify", "--max-total-dim", "4", "--samples", "4", "--seed", "5"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("seed: 5"), std::string::npos);
}

TEST(Cli, VerifyFaultInjection) {
  auto r = call({"verify", "--max-total-dim", "3", "--samples", "2", "--inject-fault"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, VerifyVacuous) {
  auto r = call({"verify", "--max-total-dim", "0", "--samples", "0", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(rigidq::cli::Json::parse(r.out)["ok"].get<bool>());
}

TEST(Cli, VerifySeedFromEnvironment) {
  ::setenv("RIGIDQ_SEED", "777", 1);
  auto r = call({"verify", "--dynkin", "A2", "--max-total-dim", "2", "--samples", "1"});
  ::unsetenv("RIGIDQ_SEED");
  EXPECT_NE(r.out.find("seed: 777"), std::string::npos);
}

TEST(Cli, VerifyCompare) {
  auto path = temp_path("decomp.json");
  write(path, call({"decompose", "--dynkin", "D5:<>><", "-d", "1,2,2,1,1", "--format", "json"}).out);
  EXPECT_EQ(call({"verify", "--compare", path}).code, 0);
  write(path, "{\"quiver\": \"A2\", \"d\": [1, 1], \"summands\": [], \"checks\": {}, \"discrepancies\": []}\n");
  EXPECT_EQ(call({"verify", "--compare", path}).code, 3);
  write(path, "{not json");
  EXPECT_EQ(call({"verify", "--compare", path}).code, 2);
}

TEST(Cli, TypeA) {
  auto ranks = call({"typea", "ranks", "--dynkin", "A3", "-d", "1,2,1", "--format", "json"});
  ASSERT_EQ(ranks.code, 0);
  auto j = rigidq::cli::Json::parse(ranks.out);
  for (const auto& row : j["ranks"])
    if (row["i"] == 1 && row["j"] == 3) EXPECT_EQ(row["composite"], 1);

  auto path = temp_path("rep.txt");
  EXPECT_EQ(call({"typea", "build", "--dynkin", "A3:><", "-d", "2,3,1", "--out", path}).code, 0);
  EXPECT_EQ(call({"typea", "check", path, "--dynkin", "A3:><", "-d", "2,3,1"}).code, 0);
  EXPECT_EQ(call({"typea", "check", path, "--dynkin", "A3:><", "-d", "2,3,1", "--field", "Q"}).code, 0);

  write(path, "# zero\n");
  auto bad = call({"typea", "check", path, "--dynkin", "A3:><", "-d", "2,3,1"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.out.find("witness"), std::string::npos);

  EXPECT_EQ(call({"typea", "ranks", "--dynkin", "D4", "-d", "1,1,1,1"}).code, 2);
  EXPECT_EQ(call({"typea", "check", "--dynkin", "A2", "-d", "1,1"}).code, 1);
}
