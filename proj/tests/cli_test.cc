// Copyright 2026 The splcit Authors
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

// Runs the splcit binary end to end and checks exit statuses and outputs.

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "test_util.h"

namespace splcit {
namespace {

namespace fs = std::filesystem;
using ::splcit::testing::DataPath;
using ::testing::HasSubstr;

struct Result {
  int status = -1;
  std::string out;
};

fs::path WorkDir() {
  static const fs::path dir = [] {
    const fs::path d = fs::path(::testing::TempDir()) / "splcit_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result RunCli(const std::string& args) {
  const fs::path out = WorkDir() / "stdout.txt";
  const std::string cmd =
      std::string(SPLCIT_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ReadFile(out)};
}

std::string GplPath() { return DataPath("models/gpl.fm"); }

TEST(CliTest, AnalyzeGpl) {
  const Result r = RunCli("analyze " + GplPath());
  EXPECT_EQ(r.status, 0);
  EXPECT_THAT(r.out, HasSubstr("products (NP): 73"));
  EXPECT_THAT(r.out, HasSubstr("valid 2-sets (|TS|): 418"));
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli("").status, 1);
  EXPECT_EQ(RunCli("frobnicate").status, 1);
  EXPECT_EQ(RunCli("generate " + GplPath() + " --algo casa").status, 1);
  EXPECT_EQ(RunCli("analyze /nonexistent/model.fm").status, 1);
  EXPECT_EQ(RunCli("--help").status, 0);
}

TEST(CliTest, ParseErrorsExitTwo) {
  const fs::path bad = WorkDir() / "bad.fm";
  std::ofstream(bad) << "model bad\nroot R\noptional A Missing\n";
  const Result r = RunCli("analyze " + bad.string());
  EXPECT_EQ(r.status, 2);
  EXPECT_THAT(r.out, HasSubstr("3:"));
}

TEST(CliTest, CapExceededExitsFour) {
  EXPECT_EQ(RunCli("analyze " + DataPath("models/syn34.fm") + " --cap 1000").status, 0);
  EXPECT_EQ(RunCli("products " + DataPath("models/syn34.fm") + " --cap 1000").status, 4);
  const Result listed = RunCli("products " + GplPath());
  EXPECT_EQ(listed.status, 0);
  EXPECT_EQ(std::count(listed.out.begin(), listed.out.end(), '\n'), 73);
}

TEST(CliTest, GenerateVerifyMetrics) {
  const fs::path ca = WorkDir() / "gpl.ca";
  ASSERT_EQ(RunCli("generate " + GplPath() + " --algo greedy --t 2 --seed 4 -o " + ca.string()).status,
            0);
  const Result verify = RunCli("verify " + GplPath() + " " + ca.string());
  EXPECT_EQ(verify.status, 0);
  EXPECT_THAT(verify.out, HasSubstr("OK"));
  const Result metrics = RunCli("metrics " + GplPath() + " " + ca.string());
  EXPECT_EQ(metrics.status, 0);
  EXPECT_THAT(metrics.out, HasSubstr("similarity"));

  // Drop all but the header and first product: rows stay valid, coverage breaks.
  std::istringstream in(ReadFile(ca));
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  const fs::path partial = WorkDir() / "partial.ca";
  std::ofstream(partial) << header << "\n" << first << "\n";
  const Result failed = RunCli("verify " + GplPath() + " " + partial.string());
  EXPECT_EQ(failed.status, 3);
  EXPECT_THAT(failed.out, HasSubstr("FAIL"));
}

TEST(CliTest, SynthIsDeterministic) {
  const Result a = RunCli("synth --features 12 --seed 5 --name demo");
  const Result b = RunCli("synth --features 12 --seed 5 --name demo");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_THAT(a.out, HasSubstr("model demo"));
  EXPECT_EQ(RunCli("synth --features 0").status, 1);
}

TEST(CliTest, BenchSkipsBrokenModelWithNonzeroExit) {
  const fs::path dir = WorkDir() / "bench";
  fs::create_directories(dir);
  std::ofstream(dir / "broken.fm") << "model broken\nroot\n";
  std::ofstream(dir / "bench.toml") << "models = [\"" << GplPath() << "\", \"broken.fm\"]\n"
                                    << "algorithms = [\"greedy\"]\nruns = 2\n";
  const Result r = RunCli("bench --config " + (dir / "bench.toml").string() + " -o " +
                       (dir / "out").string());
  EXPECT_EQ(r.status, 2);
  EXPECT_THAT(r.out, HasSubstr("broken.fm"));
  EXPECT_TRUE(fs::exists(dir / "out" / "runs.csv"));
}

}  // namespace
}  // namespace splcit
