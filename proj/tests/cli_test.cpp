// Copyright 2026 The mmfair Authors
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

#include "mmfair/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

namespace mmfair::cli {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "mmfair");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const std::string kData = MMFAIR_DATA_DIR;

TEST(AllocateCommandTest, BuiltinMmfCsv) {
  const auto r = run_args({"allocate", "--builtin", "table2", "--method", "mmf", "--output", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines_of(r.out);
  ASSERT_EQ(l.size(), 13U);
  EXPECT_EQ(l[0], "node,traffic_class,demand,allocated");
  EXPECT_EQ(l[4], "4,Advertising,120.0000,120.0000");
  EXPECT_TRUE(r.err.empty());
}

TEST(AllocateCommandTest, BuiltinProportional) {
  const auto r = run_args({"allocate", "--builtin", "table2", "--method", "lp-proportional"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines_of(r.out)[4], "4,Advertising,120.0000,90.5660");
}

TEST(AllocateCommandTest, JsonAndCsvAgree) {
  const auto csv = run_args({"allocate", "--builtin", "table2", "--method", "mmf"});
  const auto json = run_args({"allocate", "--builtin", "table2", "--method", "mmf", "--output", "json"});
  ASSERT_EQ(json.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  const auto l = lines_of(csv.out);
  ASSERT_EQ(j["allocation"].size() + 1, l.size());
  for (std::size_t i = 0; i < j["allocation"].size(); ++i) {
    const auto& row = j["allocation"][i];
    EXPECT_EQ(l[i + 1], std::to_string(row["node"].get<int>()) + "," +
                            row["traffic_class"].get<std::string>() + "," +
                            fixed4(row["demand"].get<double>()) + "," +
                            fixed4(row["allocated"].get<double>()));
  }
  EXPECT_EQ(j["total_kbps"].get<double>(), 1600.0);
}

TEST(AllocateCommandTest, ScenarioFilesInBothFormats) {
  const auto builtin = run_args({"allocate", "--builtin", "table2"});
  const auto json = run_args({"allocate", "--scenario", kData + "/table2.json"});
  const auto csv = run_args({"allocate", "--scenario", kData + "/table2.csv", "--capacity", "1600"});
  ASSERT_EQ(json.code, 0) << json.err;
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(json.out, builtin.out);
  EXPECT_EQ(csv.out, builtin.out);
  EXPECT_NE(csv.err.find("capacity overridden"), std::string::npos);
}

TEST(AllocateCommandTest, CapacityOverrideIsRecorded) {
  const auto r = run_args({"allocate", "--builtin", "table2", "--capacity", "3000", "--output", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["capacity_source"], "override");
  EXPECT_EQ(j["saturated"], false);
  EXPECT_EQ(j["total_kbps"].get<double>(), 2120.0);
}

TEST(AllocateCommandTest, InputErrorsExitOne) {
  auto r = run_args({"allocate", "--scenario", "/nonexistent/file.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("cannot read scenario"), std::string::npos);
  EXPECT_TRUE(r.out.empty());

  r = run_args({"allocate", "--scenario", kData + "/table2.csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("capacity_kbps"), std::string::npos);

  EXPECT_EQ(run_args({"allocate", "--builtin", "table2", "--capacity", "-1"}).code, 1);
  EXPECT_EQ(run_args({"allocate", "--builtin", "table3"}).code, 1);
  EXPECT_EQ(run_args({"allocate", "--builtin", "table2", "--method", "simplex"}).code, 1);
  EXPECT_EQ(run_args({"allocate"}).code, 1);
  EXPECT_EQ(run_args({}).code, 1);
  EXPECT_EQ(run_args({"frobnicate"}).code, 1);
}

TEST(CliTest, HelpExitsZero) {
  const auto r = run_args({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("compare"), std::string::npos);
}

TEST(CompareCommandTest, Table2Greedy) {
  const auto r = run_args({"compare", "--builtin", "table2", "--lp", "greedy", "--alpha", "0.05"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("decision,fail-to-reject-H0\n"), std::string::npos);
  EXPECT_NE(r.out.find("t_crit,1.7959\n"), std::string::npos);
  EXPECT_EQ(lines_of(r.out)[0], "node,traffic_class,demand,bw_lp,bw_mmf,y_deficit,x_deficit");
}

TEST(CompareCommandTest, UnsaturatedHasZeroStatistic) {
  const auto r = run_args({"compare", "--builtin", "table2", "--capacity", "5000", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& row : j["rows"]) {
    EXPECT_EQ(row["x_deficit"].get<double>(), 0.0);
    EXPECT_EQ(row["y_deficit"].get<double>(), 0.0);
  }
  EXPECT_EQ(j["ttest"]["g"].get<double>(), 0.0);
  EXPECT_EQ(j["capacity_source"], "override");
}

TEST(CompareCommandTest, BadAlphaExitsOne) {
  const auto r = run_args({"compare", "--builtin", "table2", "--alpha", "1.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("invalid parameter"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(TtestCommandTest, FilesWithHeaderAndComment) {
  const auto r = run_args({"ttest", "--x", kData + "/series_x.txt", "--y", kData + "/series_y.txt"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("z_bar,2.0000\n"), std::string::npos);
  EXPECT_NE(r.out.find("s_z,1.0000\n"), std::string::npos);
  EXPECT_NE(r.out.find("g,3.4641\n"), std::string::npos);
  EXPECT_NE(r.out.find("decision,reject-H0\n"), std::string::npos);
}

TEST(TtestCommandTest, Errors) {
  EXPECT_EQ(run_args({"ttest", "--x", kData + "/series_x.txt", "--y", kData + "/table2.csv"}).code, 1);
  EXPECT_EQ(run_args({"ttest", "--x", kData + "/series_x.txt"}).code, 1);
  EXPECT_EQ(run_args({"ttest", "--x", "/nope", "--y", "/nope"}).code, 1);
}

TEST(GameCommandTest, TopFive) {
  const auto r = run_args({"game", "--builtin", "table2", "--method", "mmf", "--top", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines_of(r.out);
  ASSERT_EQ(l.size(), 6U);
  EXPECT_EQ(l[0], "method,coalition,value,payoff,excess");
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < l.size(); ++i) {
    const double e = std::stod(l[i].substr(l[i].rfind(',') + 1));
    EXPECT_LE(e, prev);
    prev = e;
  }
}

TEST(GameCommandTest, SingleCoalition) {
  const auto r = run_args({"game", "--builtin", "table2", "--method", "mmf", "--coalition", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines_of(r.out);
  ASSERT_EQ(l.size(), 2U);
  EXPECT_EQ(l[1], "mmf,1,0.0000,135.0000,-135.0000");
}

TEST(GameCommandTest, MultiMemberCoalitionJson) {
  const auto r = run_args({"game", "--builtin", "table2", "--coalition", "1,2,3,5,6,7,8,9,10,11,12",
                           "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto& row = j["listings"][0]["excesses"][0];
  EXPECT_EQ(row["value"].get<double>(), 1480.0);
  EXPECT_NEAR(row["excess"].get<double>(), 0.0, 1e-9);
}

TEST(GameCommandTest, TwoMethodVerdict) {
  const auto r = run_args({"game", "--builtin", "table2", "--method", "mmf", "--method", "lp-greedy",
                           "--top", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict,mmf more-fair\n"), std::string::npos) << r.out;
  const auto rev = run_args({"game", "--builtin", "table2", "--method", "lp-greedy", "--method", "mmf",
                             "--top", "0"});
  EXPECT_NE(rev.out.find("verdict,lp-greedy less-fair\n"), std::string::npos) << rev.out;
}

TEST(GameCommandTest, Errors) {
  EXPECT_EQ(run_args({"game", "--builtin", "table2", "--coalition", "99"}).code, 1);
  EXPECT_EQ(run_args({"game", "--builtin", "table2", "--method", "mmf", "--method", "lp-greedy",
                      "--method", "lp-proportional"}).code, 1);
  EXPECT_EQ(run_args({"game", "--builtin", "table2", "--top", "3", "--coalition", "1"}).code, 1);
}

TEST(GameCommandTest, EnumerationGuardExitsOne) {
  std::string doc = R"({"capacity_kbps": 10, "nodes": [)";
  for (int i = 1; i <= 21; ++i) {
    if (i > 1) doc += ",";
    doc += R"({"id": )" + std::to_string(i) + R"(, "traffic_class": "t", "demand_kbps": 1})";
  }
  doc += "]}";
  const std::string path = ::testing::TempDir() + "/mmfair_21_nodes.json";
  std::ofstream(path) << doc;
  const auto r = run_args({"game", "--scenario", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("coalition space too large"), std::string::npos) << r.err;
  // A single coalition does not need the enumeration.
  EXPECT_EQ(run_args({"game", "--scenario", path, "--coalition", "3"}).code, 0);
}

TEST(CliProperty, DeterministicOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"compare", "--builtin", "table2", "--lp", "greedy"},
           {"compare", "--builtin", "table2", "--lp", "proportional", "--output", "json"},
           {"game", "--builtin", "table2", "--method", "mmf", "--top", "50"},
           {"allocate", "--builtin", "table2", "--method", "lp-greedy", "--output", "json"}}) {
    const auto a = run_args(args);
    const auto b = run_args(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace mmfair::cli
