// Copyright 2026 The LieForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "cli.h"

namespace lieforge::cli {
namespace {

using json = nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = kExitOk) {
  Result r = run_cli(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  return j;
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "lieforge_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"audit", "--k", "9"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"reduce", "--member", "2", "--c", "1 +"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify-solution", "--solution", "nope"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--threads", "0", "audit", "--k", "2"}).code, kExitUsage);
}

TEST(Cli, HelpHasNoSectionReferences) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"--help"}, {"symmetries", "find", "--help"},
        {"integrate", "--help"}, {"verify-solution", "--help"}}) {
    Result r = run_cli(args);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_FALSE(std::regex_search(r.out, std::regex("§|[Ss]ection|Eq\\.")));
  }
}

TEST(Cli, MemberPrintsGrammar) {
  Result r = run_cli({"member", "--n", "1", "--split"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "v_t = -v_x^2 + w_x^2 + w_xx\nw_t = -2*v_x*w_x - v_xx\n");
}

TEST(Cli, AuditMember2IsClean) {
  json j = run_json({"audit", "--k", "2"});
  EXPECT_TRUE(j["delta"].empty());
  json j4 = run_json({"audit", "--k", "4"}, kExitVerification);
  EXPECT_FALSE(j4["delta"].empty());
}

TEST(Cli, KeyOrderIsStable) {
  json j = run_json({"audit", "--k", "2"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "command", "k", "match", "delta", "generated"}));
}

TEST(Cli, FindMember4) {
  json j = run_json({"--threads", "2", "symmetries", "find", "--member", "4", "--degree", "2",
                     "--trig", "2", "--expw", "1"});
  EXPECT_EQ(j["dimension"], 4);
}

TEST(Cli, VerifyFieldFile) {
  auto path = temp_dir() / "field.json";
  std::ofstream(path) << R"({"label": "scaling", "components": {"t": "t", "x": "x/3"}})";
  json j = run_json({"symmetries", "verify", "--member", "3", "--field", path.string()});
  EXPECT_EQ(j["status"], "Zero");
  std::ofstream(path) << R"({"t": "1", "x": "x/3"})";
  json bad = run_json({"symmetries", "verify", "--member", "3", "--field", path.string()},
                      kExitVerification);
  EXPECT_EQ(bad["status"], "Nonzero");
  EXPECT_FALSE(bad["remainder"].empty());
}

TEST(Cli, BracketsReducedMember3) {
  json j = run_json({"brackets", "--member", "3", "--reduced"});
  EXPECT_TRUE(j["closed"].get<bool>());
  EXPECT_TRUE(j["jacobi"].get<bool>());
  EXPECT_EQ(j["signature"]["center"], 2);
  EXPECT_TRUE(j["catalogue_disagreements"].empty());
}

TEST(Cli, BracketsMember2ListsDisagreements) {
  json j = run_json({"brackets", "--member", "2"});
  EXPECT_FALSE(j["catalogue_disagreements"].empty());
}

TEST(Cli, ReduceMember2) {
  json j = run_json({"reduce", "--member", "2", "--c", "1", "--json"});
  EXPECT_TRUE(j["matches_catalogue"].get<bool>());
  json o = run_json({"reduce", "--member", "2", "--c", "1", "--order-reduce", "--json"});
  EXPECT_EQ(o["catalogue"], "3.3");
  EXPECT_TRUE(o["matches_catalogue"].get<bool>());
}

TEST(Cli, VerifySolutionExitCodes) {
  json tan = run_json({"verify-solution", "--system", "3.3", "--solution", "tan", "--c", "1"});
  EXPECT_EQ(tan["status"], "Zero");
  json sn = run_json({"verify-solution", "--solution", "sn"});
  EXPECT_TRUE(sn["pass"].get<bool>());
}

TEST(Cli, IntegrateWritesCsv) {
  auto path = temp_dir() / "out.csv";
  json j = run_json({"integrate", "--system", "3.3", "--c", "1", "--from", "tan", "--s0", "0",
                     "--h", "1e-3", "--range", "0:2", "--csv", path.string()});
  EXPECT_LT(j["max_error"].get<double>(), 1e-6);
  EXPECT_EQ(j["steps"], 2000);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "s,F_re,F_im,G_re,G_im");
}

TEST(Cli, Fig1) {
  auto path = temp_dir() / "fig1.csv";
  json j = run_json({"fig1", "--c", "1", "--F1", "0,1,2", "--csv", path.string()});
  ASSERT_EQ(j["series"].size(), 3u);
  for (const auto& s : j["series"]) {
    EXPECT_TRUE(std::filesystem::exists(s["path"].get<std::string>()));
    EXPECT_LT(s["periodicity_defect"].get<double>(), 1e-6);
  }
}

TEST(Cli, SeedEnvironment) {
  ::setenv("LIEFORGE_SEED", "not-a-number", 1);
  EXPECT_EQ(run_cli({"audit", "--k", "2"}).code, kExitUsage);
  ::setenv("LIEFORGE_SEED", "1234", 1);
  json a = run_json({"verify-solution", "--solution", "tan"});
  ::unsetenv("LIEFORGE_SEED");
  json b = run_json({"verify-solution", "--solution", "tan"});
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace lieforge::cli
