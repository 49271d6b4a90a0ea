// Copyright 2026 The Authors.
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

#include "amplikit/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "amplikit/json_io.h"

namespace amplikit {
namespace {

const std::string kData = AMPLIKIT_DATA_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(CliTest, VerifyFVector) {
  const CliRun r = Cli({"verify", "fvector", "--n", "5", "--k", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("4q³+15q²+20q+10"), std::string::npos) << r.out;
}

TEST(CliTest, EnumerateBcfw) {
  const CliRun r = Cli({"enumerate", "bcfw", "--n", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("summary"), "1,3,3,1");
  EXPECT_EQ(j.at("counts"), Json::parse("[1,3,3,1]"));
}

TEST(CliTest, ConvertTenLabelDiagram) {
  const CliRun r = Cli({"convert", "le", "--file", kData + "/le_4_10.json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("permutation").at("pretty"), "(1̲,5,4,9,7,6̄,2,10,3,8)");

  // The permutation and the positroid convert back to the same diagram.
  const std::string perm = WriteTemp("perm.json", j.at("permutation").dump());
  const CliRun back = Cli({"convert", "perm", "--file", perm});
  ASSERT_EQ(back.code, kExitOk) << back.err;
  EXPECT_EQ(Json::parse(back.out).at("diagram"), j.at("diagram"));
  const std::string pos = WriteTemp("positroid.json", j.at("positroid").dump());
  const CliRun again = Cli({"convert", "positroid", "--file", pos});
  ASSERT_EQ(again.code, kExitOk) << again.err;
  EXPECT_EQ(Json::parse(again.out).at("diagram"), j.at("diagram"));

  const CliRun dot = Cli({"convert", "le", "--file", kData + "/le_4_10.json",
                       "--format", "dot"});
  EXPECT_EQ(dot.code, kExitOk);
  EXPECT_NE(dot.out.find("graph"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"verify"}).code, kExitUsage);
  EXPECT_EQ(Cli({"verify", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(Cli({"enumerate", "bcfw", "--n", "4", "--m", "2"}).code,
            kExitUsage);
  const CliRun big = Cli({"enumerate", "bcfw", "--n", "20"});
  EXPECT_EQ(big.code, kExitScale);
  EXPECT_FALSE(big.err.empty());
  const CliRun usage = Cli({"frobnicate"});
  EXPECT_EQ(usage.code, kExitUsage);
  EXPECT_NE(usage.err.find("Usage"), std::string::npos);
}

TEST(CliTest, DeterministicAcrossRunsAndThreads) {
  const std::vector<std::string> args{"verify", "gk-sampling", "--n", "5",
                                      "--instances", "3", "--seed", "9",
                                      "--format", "json"};
  setenv("AMPLIKIT_THREADS", "1", 1);
  const CliRun one = Cli(args);
  setenv("AMPLIKIT_THREADS", "4", 1);
  const CliRun four = Cli(args);
  const CliRun again = Cli(args);
  unsetenv("AMPLIKIT_THREADS");
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(four.out, again.out);
}

TEST(CliTest, ArrangementOutputs) {
  const std::string basis = kData + "/example_5_2.json";
  const CliRun build = Cli({"arrangement", "build", "--basis", basis});
  ASSERT_EQ(build.code, kExitOk) << build.err;
  EXPECT_NE(build.out.find("10y = 1"), std::string::npos);
  const CliRun csv =
      Cli({"arrangement", "faces", "--basis", basis, "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(csv.out.rfind("label,dimension,bounded,witness\n", 0), 0u);
  const CliRun svg = Cli({"arrangement", "svg", "--n", "5", "--k", "2"});
  ASSERT_EQ(svg.code, kExitOk) << svg.err;
  EXPECT_NE(svg.out.find("<svg"), std::string::npos);
}

TEST(CliTest, ImageAndReport) {
  const std::string d =
      WriteTemp("cell.json", R"({"k":1,"n":4,"fill":["+++"]})");
  const CliRun image = Cli({"image", d, "--samples", "3"});
  ASSERT_EQ(image.code, kExitOk) << image.err;
  const Json j = Json::parse(image.out);
  EXPECT_EQ(j.at("injective"), false);
  EXPECT_TRUE(j.contains("certificate"));

  const CliRun report = Cli({"report", "--n", "5", "--k", "2"});
  ASSERT_EQ(report.code, kExitOk) << report.err;
  EXPECT_EQ(Json::parse(report.out).at("strata").size(), 31u);
}

}  // namespace
}  // namespace amplikit
