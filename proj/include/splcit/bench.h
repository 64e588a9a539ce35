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

// Experimental protocol: independent seeded runs of every algorithm on every
// model, aggregated into per-cell means, pairwise tests and a rank
// correlation matrix, and written out as CSV and plain-text reports.

#ifndef SPLCIT_BENCH_H_
#define SPLCIT_BENCH_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splcit/feature_model.h"
#include "splcit/generators.h"
#include "splcit/metrics.h"
#include "splcit/sat.h"
#include "splcit/stats.h"
#include "splcit/tset.h"

namespace splcit {

struct BenchmarkConfig {
  std::vector<std::string> model_paths;
  std::vector<Algorithm> algorithms = {Algorithm::kGreedy, Algorithm::kAnnealing,
                                       Algorithm::kGenetic};
  int t = 2;
  int runs = 30;
  // Run i of every cell uses seed base_seed + i.
  std::uint64_t base_seed = 0;
  // 0 means one per hardware thread.
  int workers = 0;
  std::string output_dir;
  // Per-algorithm parameters; the seed field is ignored.
  GeneratorConfig generator;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;

  // Throws splcit::Error(kInvalidArgument).
  void Validate() const;
};

// Reads the TOML subset used by bench configs:
//
//   models = ["models/gpl.fm", ...]     # relative to `base_dir`
//   algorithms = ["greedy", "annealing", "genetic"]
//   t = 2
//   runs = 30
//   base_seed = 0
//   workers = 4
//   output_dir = "out"                  # relative to `base_dir`
//   [annealing]  initial_temperature, cooling_factor, moves_per_temperature,
//                min_temperature, max_restarts
//   [genetic]    population_size, crossover_rate, mutation_rate,
//                generations_per_product
//   [greedy]     candidate_pool
//
// Values are strings, integers, floats, booleans or single-type arrays
// (which may span lines). Unknown keys and tables are errors. Throws
// splcit::ParseError with the offending line and column.
BenchmarkConfig ParseBenchmarkConfig(std::string_view text, const std::string& base_dir);
BenchmarkConfig LoadBenchmarkConfig(const std::string& path);

struct ModelInfo {
  std::shared_ptr<const FeatureModel> model;
  std::string name;
  std::string path;
  int features = 0;
  // Unset when the model has more products than the enumeration cap.
  std::optional<std::uint64_t> products;
  std::size_t tsets = 0;
};

struct RunRecord {
  std::string model;
  Algorithm algorithm = Algorithm::kGreedy;
  int run = 0;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::int64_t generation_ms = 0;
  double similarity = 0.0;
  std::optional<double> mean_tuple_frequency;
  FrequencyHistogram histogram{};
  CoveringArray array;
};

struct CellSummary {
  std::string model;
  Algorithm algorithm = Algorithm::kGreedy;
  std::size_t runs = 0;
  double mean_size = 0.0;
  double mean_ms = 0.0;
  double mean_similarity = 0.0;
};

inline constexpr std::string_view kPooledModel = "ALL";

struct PairwiseRow {
  // kPooledModel for rows pooled over every model.
  std::string model;
  std::string metric;
  Algorithm a = Algorithm::kGreedy;
  Algorithm b = Algorithm::kGreedy;
  PairwiseTestResult result;
};

inline constexpr int kCorrelationVariables = 5;
inline constexpr std::array<std::string_view, kCorrelationVariables>
    kCorrelationNames = {"Products", "Features", "TSSize", "Performance", "Similarity"};

// Spearman correlations over all runs. Off-diagonal entries are unset when
// a variable is constant or there are fewer than two runs.
struct CorrelationMatrix {
  std::array<std::array<std::optional<double>, kCorrelationVariables>,
             kCorrelationVariables>
      values{};
};

struct SkippedModel {
  std::string path;
  std::string reason;
};

struct ComparisonReport {
  int t = 2;
  std::vector<ModelInfo> models;
  // Sorted by (model name, algorithm name, run).
  std::vector<RunRecord> runs;
  std::vector<CellSummary> summary;
  std::vector<PairwiseRow> pairwise;
  CorrelationMatrix correlations;
  std::vector<SkippedModel> skipped;
};

// Runs every (model, algorithm, run) cell on up to `workers` threads.
// Models that fail to load are recorded in `skipped`. Throws
// splcit::Error(kVerification) naming model, algorithm and seed if any array
// is invalid or incomplete.
ComparisonReport RunBenchmark(const BenchmarkConfig& config);

// Fills summary, pairwise and correlations from models and runs; `runs` must
// already be in canonical order.
void Aggregate(ComparisonReport& report);

// Writes runs.csv, timings.csv, summary.csv, pairwise.csv, correlations.csv,
// summary.txt and the archived arrays under arrays/<model>/. Throws
// splcit::Error(kIo) when the directory cannot be written.
void EmitReports(const ComparisonReport& report, const std::string& dir);

// Header and row of runs.csv. Generation time lives in timings.csv so that
// runs.csv depends only on the config.
std::string RunsCsvHeader();
std::string RunsCsvRow(const RunRecord& record);

// Relative path of a run's archived array inside the report directory.
std::string ArchivedArrayPath(const RunRecord& record);

struct ModelReport {
  std::string name;
  int features = 0;
  std::optional<std::uint64_t> products;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::size_t pair_tsets = 0;
  std::vector<std::string> core;
  std::vector<std::string> variant;
  std::vector<std::string> dead;
  bool void_model = false;
};

ModelReport AnalyzeModel(const FeatureModel& model,
                         std::uint64_t cap = kDefaultEnumerationCap);
std::string FormatModelReport(const ModelReport& report);

}  // namespace splcit

#endif  // SPLCIT_BENCH_H_
