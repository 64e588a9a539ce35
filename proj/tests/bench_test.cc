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

#include "splcit/bench.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "splcit/error.h"
#include "test_util.h"

namespace splcit {
namespace {

namespace fs = std::filesystem;
using ::splcit::testing::DataPath;
using ::splcit::testing::Gpl;
using ::testing::HasSubstr;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
}

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / ("splcit_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ParseError ConfigError(const std::string& text) {
  try {
    ParseBenchmarkConfig(text, "");
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError("", 0, 0);
}

TEST(BenchConfigTest, ParsesEveryKey) {
  const BenchmarkConfig c = ParseBenchmarkConfig(R"(# comment
models = [
  "models/a.fm",  # trailing comment
  "/abs/b.fm",
]
algorithms = ["greedy", "genetic"]
t = 3
runs = 5
base_seed = 100
workers = 2
output_dir = "out"
enumeration_cap = 5000

[annealing]
initial_temperature = 2.5
cooling_factor = 0.9
moves_per_temperature = 10
min_temperature = 0.01
max_restarts = 2

[genetic]
population_size = 12
crossover_rate = 0.5
mutation_rate = 0.2
generations_per_product = 7

[greedy]
candidate_pool = 9
)",
                                                 "/base");
  EXPECT_THAT(c.model_paths, ::testing::ElementsAre("/base/models/a.fm", "/abs/b.fm"));
  EXPECT_THAT(c.algorithms, ::testing::ElementsAre(Algorithm::kGreedy, Algorithm::kGenetic));
  EXPECT_EQ(c.t, 3);
  EXPECT_EQ(c.runs, 5);
  EXPECT_EQ(c.base_seed, 100u);
  EXPECT_EQ(c.workers, 2);
  EXPECT_EQ(c.output_dir, "/base/out");
  EXPECT_EQ(c.enumeration_cap, 5000u);
  EXPECT_EQ(c.generator.annealing.initial_temperature, 2.5);
  EXPECT_EQ(c.generator.annealing.cooling_factor, 0.9);
  EXPECT_EQ(c.generator.annealing.moves_per_temperature, 10);
  EXPECT_EQ(c.generator.annealing.min_temperature, 0.01);
  EXPECT_EQ(c.generator.annealing.max_restarts, 2);
  EXPECT_EQ(c.generator.genetic.population_size, 12);
  EXPECT_EQ(c.generator.genetic.crossover_rate, 0.5);
  EXPECT_EQ(c.generator.genetic.mutation_rate, 0.2);
  EXPECT_EQ(c.generator.genetic.generations_per_product, 7);
  EXPECT_EQ(c.generator.greedy.candidate_pool, 9);
  EXPECT_NO_THROW(c.Validate());
}

TEST(BenchConfigTest, DefaultsAndBundledConfig) {
  const BenchmarkConfig c = ParseBenchmarkConfig("models = [\"x.fm\"]\n", "");
  EXPECT_EQ(c.runs, 30);
  EXPECT_EQ(c.t, 2);
  EXPECT_EQ(c.algorithms.size(), 3u);
  const BenchmarkConfig bundled = LoadBenchmarkConfig(DataPath("bench.toml"));
  EXPECT_EQ(bundled.model_paths.size(), 11u);
  EXPECT_EQ(bundled.runs, 30);
  for (const std::string& path : bundled.model_paths) EXPECT_TRUE(fs::exists(path)) << path;
}

TEST(BenchConfigTest, ErrorsCarryLocations) {
  ParseError e = ConfigError("runs = 3\nruns = 4\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 1);
  EXPECT_THAT(e.what(), HasSubstr("duplicate"));

  e = ConfigError("t = 2\nbogus = 1\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_THAT(e.what(), HasSubstr("bogus"));

  e = ConfigError("\n[solver]\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 1);

  e = ConfigError("algorithms = [\"greedy\", \"casa\"]\n");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 25);

  EXPECT_EQ(ConfigError("runs = \"x\"\n").line(), 1);
  EXPECT_EQ(ConfigError("runs = 0\n").line(), 1);
  EXPECT_EQ(ConfigError("models = [\"a\", 1]\n").line(), 1);
  EXPECT_EQ(ConfigError("output_dir = \"unterminated\n").line(), 1);
  EXPECT_EQ(ConfigError("[greedy]\n[greedy]\n").line(), 2);
  EXPECT_THROW(LoadBenchmarkConfig("/nonexistent/bench.toml"), Error);
}

TEST(BenchConfigTest, ValidateRejectsBadConfigs) {
  BenchmarkConfig c;
  EXPECT_THROW(c.Validate(), Error);
  c.model_paths = {"a.fm"};
  EXPECT_NO_THROW(c.Validate());
  c.algorithms.push_back(Algorithm::kGreedy);
  EXPECT_THROW(c.Validate(), Error);
  c.algorithms.clear();
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.model_paths = {"a.fm"};
  c.generator.genetic.crossover_rate = -0.1;
  EXPECT_THROW(c.Validate(), Error);
}

// Small two-model benchmark with cheap generator settings.
BenchmarkConfig SmallConfig(const fs::path& dir) {
  WriteText(dir / "tiny.fm",
            "model tiny\nroot R\noptional A R\noptional B R\nxor R C D\nrequires A C\n");
  BenchmarkConfig c;
  c.model_paths = {(dir / "tiny.fm").string(), DataPath("models/gpl.fm")};
  c.algorithms = {Algorithm::kGreedy, Algorithm::kAnnealing};
  c.runs = 3;
  c.base_seed = 10;
  c.workers = 2;
  c.generator.annealing.moves_per_temperature = 100;
  c.generator.annealing.max_restarts = 1;
  return c;
}

TEST(RunBenchmarkTest, CanonicalOrderSeedsAndAggregates) {
  const fs::path dir = FreshDir("bench_order");
  const ComparisonReport report = RunBenchmark(SmallConfig(dir));
  ASSERT_EQ(report.models.size(), 2u);
  EXPECT_EQ(report.models[0].name, "gpl");
  EXPECT_EQ(report.models[0].products, 73u);
  EXPECT_EQ(report.models[0].tsets, 418u);
  EXPECT_EQ(report.models[1].name, "tiny");
  EXPECT_TRUE(report.skipped.empty());

  ASSERT_EQ(report.runs.size(), 12u);
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    const RunRecord& r = report.runs[i];
    EXPECT_EQ(r.model, i < 6 ? "gpl" : "tiny");
    EXPECT_EQ(r.algorithm, i % 6 < 3 ? Algorithm::kAnnealing : Algorithm::kGreedy);
    EXPECT_EQ(r.run, static_cast<int>(i % 3));
    EXPECT_EQ(r.seed, 10u + i % 3);
    EXPECT_EQ(r.size, r.array.products.size());
    EXPECT_EQ(r.array.meta.seed, r.seed);
  }

  ASSERT_EQ(report.summary.size(), 4u);
  for (const CellSummary& s : report.summary) {
    double size = 0, sim = 0;
    for (const RunRecord& r : report.runs) {
      if (r.model == s.model && r.algorithm == s.algorithm) {
        size += static_cast<double>(r.size);
        sim += r.similarity;
      }
    }
    EXPECT_EQ(s.runs, 3u);
    EXPECT_NEAR(s.mean_size, size / 3, 1e-12);
    EXPECT_NEAR(s.mean_similarity, sim / 3, 1e-12);
  }

  // Two ordered pairs x three metrics, per model and pooled.
  EXPECT_EQ(report.pairwise.size(), 18u);
  EXPECT_EQ(std::count_if(report.pairwise.begin(), report.pairwise.end(),
                          [](const PairwiseRow& r) { return r.model == kPooledModel; }),
            6);
  for (const PairwiseRow& row : report.pairwise) {
    const auto mirror = std::find_if(report.pairwise.begin(), report.pairwise.end(),
                                     [&](const PairwiseRow& o) {
                                       return o.model == row.model && o.metric == row.metric &&
                                              o.a == row.b && o.b == row.a;
                                     });
    ASSERT_NE(mirror, report.pairwise.end());
    EXPECT_EQ(row.result.a12 + mirror->result.a12, 1.0);
    EXPECT_EQ(row.result.p_value, mirror->result.p_value);
  }

  for (int i = 0; i < kCorrelationVariables; ++i) {
    EXPECT_EQ(report.correlations.values[i][i], 1.0);
    for (int j = 0; j < kCorrelationVariables; ++j) {
      EXPECT_EQ(report.correlations.values[i][j], report.correlations.values[j][i]);
    }
  }
}

TEST(RunBenchmarkTest, DeterministicAcrossWorkerCounts) {
  const fs::path dir = FreshDir("bench_workers");
  BenchmarkConfig c = SmallConfig(dir);
  c.workers = 1;
  const ComparisonReport one = RunBenchmark(c);
  c.workers = 4;
  const ComparisonReport four = RunBenchmark(c);
  ASSERT_EQ(one.runs.size(), four.runs.size());
  for (std::size_t i = 0; i < one.runs.size(); ++i) {
    EXPECT_EQ(RunsCsvRow(one.runs[i]), RunsCsvRow(four.runs[i]));
  }
}

TEST(RunBenchmarkTest, SkipsBadModels) {
  const fs::path dir = FreshDir("bench_skip");
  WriteText(dir / "void.fm", "model void\nroot R\nmandatory A R\nexcludes R A\n");
  WriteText(dir / "broken.fm", "model broken\nroot\n");
  WriteText(dir / "gpl_copy.fm", ReadFile(DataPath("models/gpl.fm")));
  BenchmarkConfig c = SmallConfig(dir);
  c.model_paths = {DataPath("models/gpl.fm"), (dir / "void.fm").string(),
                   (dir / "broken.fm").string(), (dir / "missing.fm").string(),
                   (dir / "gpl_copy.fm").string()};
  c.runs = 1;
  const ComparisonReport report = RunBenchmark(c);
  ASSERT_EQ(report.models.size(), 1u);
  EXPECT_EQ(report.skipped.size(), 4u);
  for (const SkippedModel& s : report.skipped) EXPECT_FALSE(s.reason.empty());
}

TEST(RunBenchmarkTest, OverCapModelStillRuns) {
  const fs::path dir = FreshDir("bench_cap");
  BenchmarkConfig c = SmallConfig(dir);
  c.enumeration_cap = 10;
  c.runs = 1;
  const ComparisonReport report = RunBenchmark(c);
  ASSERT_EQ(report.models.size(), 2u);
  EXPECT_EQ(report.models[0].products, std::nullopt);
  EXPECT_EQ(report.runs.size(), 4u);
}

TEST(AggregateTest, SingleCellHasNoPairwiseRowsAndNaCorrelations) {
  const fs::path dir = FreshDir("bench_single");
  BenchmarkConfig c = SmallConfig(dir);
  c.model_paths.resize(1);
  c.algorithms = {Algorithm::kGreedy};
  c.runs = 1;
  const ComparisonReport report = RunBenchmark(c);
  EXPECT_EQ(report.summary.size(), 1u);
  EXPECT_TRUE(report.pairwise.empty());
  EXPECT_EQ(report.correlations.values[0][1], std::nullopt);
  EXPECT_EQ(report.correlations.values[2][2], 1.0);
}

TEST(AggregateTest, MonotoneSizeGivesUnitSpearman) {
  ComparisonReport report;
  for (int i = 0; i < 4; ++i) {
    const std::string name = "m" + std::to_string(i);
    report.models.push_back({nullptr, name, "", 10 * (i + 1),
                             std::uint64_t{100} << i, static_cast<std::size_t>(50 * (i + 1))});
    RunRecord r;
    r.model = name;
    r.size = static_cast<std::size_t>(3 + i);
    r.generation_ms = 5 - i;
    r.similarity = 0.1 * i;
    report.runs.push_back(r);
  }
  Aggregate(report);
  const auto& v = report.correlations.values;
  EXPECT_NEAR(*v[0][1], 1.0, 1e-12);
  EXPECT_NEAR(*v[1][2], 1.0, 1e-12);
  EXPECT_NEAR(*v[1][3], -1.0, 1e-12);
  EXPECT_NEAR(*v[2][4], 1.0, 1e-12);
  EXPECT_TRUE(report.pairwise.empty());
}

TEST(EmitReportsTest, RepeatableAndRecomputable) {
  const fs::path dir = FreshDir("bench_emit");
  const ComparisonReport report = RunBenchmark(SmallConfig(dir));
  EmitReports(report, (dir / "a").string());
  EmitReports(report, (dir / "b").string());
  for (const char* file : {"runs.csv", "models.csv", "summary.csv", "pairwise.csv",
                           "correlations.csv", "summary.txt"}) {
    const std::string a = ReadFile(dir / "a" / file);
    EXPECT_FALSE(a.empty()) << file;
    EXPECT_EQ(a, ReadFile(dir / "b" / file)) << file;
  }
  EXPECT_TRUE(fs::exists(dir / "a" / "timings.csv"));

  const std::string runs = ReadFile(dir / "a" / "runs.csv");
  EXPECT_EQ(runs.substr(0, runs.find('\n')), RunsCsvHeader());
  EXPECT_EQ(std::count(runs.begin(), runs.end(), '\n'), 13);

  // Every row follows from its archived array alone.
  for (const RunRecord& r : report.runs) {
    const FeatureModel model = r.model == "gpl" ? Gpl() : LoadModel((dir / "tiny.fm").string());
    const CoveringArray archived =
        LoadCoveringArray(model, (dir / "a" / ArchivedArrayPath(r)).string());
    const TSetUniverse universe = EnumerateValidTSets(model, 2);
    const SuiteMetrics m =
        ComputeSuiteMetrics(ClassifyFeaturesWithSolver(model), universe, archived);
    RunRecord again = r;
    again.size = m.size;
    again.similarity = m.similarity;
    again.mean_tuple_frequency = m.mean_tuple_frequency;
    again.histogram = m.frequency_histogram;
    EXPECT_EQ(RunsCsvRow(again), RunsCsvRow(r));
    EXPECT_TRUE(VerifyCoveringArray(model, universe, archived.products).ok());
  }

  const std::string text = ReadFile(dir / "a" / "summary.txt");
  EXPECT_THAT(text, HasSubstr("gpl"));
  EXPECT_THAT(text, HasSubstr("tiny"));
  EXPECT_THAT(text, HasSubstr("all models"));
}

TEST(EmitReportsTest, UnwritableDirectoryIsIoError) {
  const fs::path dir = FreshDir("bench_io");
  WriteText(dir / "blocker", "x");
  ComparisonReport report;
  try {
    EmitReports(report, (dir / "blocker" / "out").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(AnalyzeModelTest, GplAndSmallModels) {
  const ModelReport gpl = AnalyzeModel(Gpl());
  EXPECT_EQ(gpl.name, "gpl");
  EXPECT_EQ(gpl.features, 18);
  EXPECT_EQ(gpl.products, 73u);
  EXPECT_EQ(gpl.pair_tsets, 418u);
  EXPECT_EQ(gpl.core.size(), 5u);
  EXPECT_EQ(gpl.variant.size(), 13u);
  EXPECT_TRUE(gpl.dead.empty());
  EXPECT_FALSE(gpl.void_model);
  const std::string text = FormatModelReport(gpl);
  EXPECT_THAT(text, HasSubstr("products (NP): 73"));
  EXPECT_THAT(text, HasSubstr("valid 2-sets (|TS|): 418"));

  const ModelReport root = AnalyzeModel(ParseModel("model r\nroot R\n"));
  EXPECT_EQ(root.products, 1u);
  EXPECT_EQ(root.pair_tsets, 0u);

  std::string text10 = "model m\nroot R\n";
  for (int i = 0; i < 10; ++i) text10 += "optional C" + std::to_string(i) + " R\n";
  EXPECT_EQ(AnalyzeModel(ParseModel(text10)).products, 1024u);
  EXPECT_EQ(AnalyzeModel(ParseModel(text10), 100).products, std::nullopt);

  const ModelReport dead = AnalyzeModel(
      ParseModel("model d\nroot R\noptional A R\noptional B R\nrequires A B\nexcludes A B\n"));
  EXPECT_THAT(dead.dead, ::testing::ElementsAre("A"));
  const ModelReport void_model =
      AnalyzeModel(ParseModel("model v\nroot R\nmandatory A R\nexcludes R A\n"));
  EXPECT_TRUE(void_model.void_model);
  EXPECT_EQ(void_model.products, 0u);
}

}  // namespace
}  // namespace splcit
