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

// splcit: analyze feature models, generate and check pairwise covering
// arrays, and run the comparison benchmark.
//
// Exit status: 0 success, 1 usage, 2 parse error, 3 verification failure,
// 4 enumeration cap exceeded.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "splcit/bench.h"
#include "splcit/error.h"
#include "splcit/feature_model.h"
#include "splcit/generators.h"
#include "splcit/metrics.h"
#include "splcit/sat.h"
#include "splcit/synthetic.h"
#include "splcit/tset.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kVerification = 3, kCap = 4 };

int ExitFor(const splcit::Error& e) {
  switch (e.code()) {
    case splcit::ErrorCode::kParse: return kParse;
    case splcit::ErrorCode::kVerification: return kVerification;
    case splcit::ErrorCode::kCapExceeded: return kCap;
    default: return kUsage;
  }
}

void AddGeneratorOptions(CLI::App* cmd, splcit::GeneratorConfig& gc) {
  cmd->add_option("--initial-temperature", gc.annealing.initial_temperature,
                  "annealing start temperature");
  cmd->add_option("--cooling", gc.annealing.cooling_factor, "annealing cooling factor");
  cmd->add_option("--moves", gc.annealing.moves_per_temperature,
                  "annealing moves per temperature");
  cmd->add_option("--min-temperature", gc.annealing.min_temperature,
                  "annealing stop temperature");
  cmd->add_option("--restarts", gc.annealing.max_restarts, "annealing passes");
  cmd->add_option("--population", gc.genetic.population_size, "genetic population size");
  cmd->add_option("--crossover", gc.genetic.crossover_rate, "genetic crossover rate");
  cmd->add_option("--mutation", gc.genetic.mutation_rate,
                  "genetic per-feature mutation rate (default 1/|FL|)");
  cmd->add_option("--generations", gc.genetic.generations_per_product,
                  "genetic generations per product");
  cmd->add_option("--candidate-pool", gc.greedy.candidate_pool,
                  "greedy t-sets examined per product (0 = all)");
}

int Analyze(const std::string& path, std::uint64_t cap) {
  const splcit::FeatureModel model = splcit::LoadModel(path);
  std::cout << splcit::FormatModelReport(splcit::AnalyzeModel(model, cap));
  return kOk;
}

int Products(const std::string& path, std::uint64_t cap) {
  const splcit::FeatureModel model = splcit::LoadModel(path);
  for (const splcit::FeatureSet& product : splcit::EnumerateProducts(model, cap)) {
    std::string line;
    for (int f : product.sel()) line += (line.empty() ? "" : " ") + model.feature(f).name;
    std::cout << line << "\n";
  }
  return kOk;
}

int GenerateCmd(const std::string& path, const std::string& algo_name, int t,
                splcit::GeneratorConfig gc, const std::string& output) {
  const auto algorithm = splcit::ParseAlgorithm(algo_name);
  if (!algorithm) {
    std::cerr << "error: unknown algorithm '" << algo_name << "'\n";
    return kUsage;
  }
  gc.Validate();
  const splcit::Problem problem(splcit::LoadModel(path), t);
  const splcit::CoveringArray array = splcit::Generate(problem, *algorithm, gc);
  if (output.empty() || output == "-") {
    std::cout << splcit::SerializeCoveringArray(problem.model(), array);
  } else {
    splcit::SaveCoveringArray(problem.model(), array, output);
    std::cerr << "wrote " << array.products.size() << " products to " << output << "\n";
  }
  return kOk;
}

int Metrics(const std::string& model_path, const std::string& suite_path,
            bool frequencies) {
  const splcit::FeatureModel model = splcit::LoadModel(model_path);
  const splcit::CoveringArray array = splcit::LoadCoveringArray(model, suite_path);
  const splcit::TSetUniverse universe = splcit::EnumerateValidTSets(model, array.t);
  const splcit::SuiteMetrics metrics = splcit::ComputeSuiteMetrics(
      splcit::ClassifyFeaturesWithSolver(model), universe, array);
  std::cout << splcit::MetricsCsvHeader() << "\n"
            << splcit::MetricsCsvRow(model.name(), array, metrics) << "\n";
  if (frequencies) {
    std::cout << "\ntset,frequency\n";
    for (std::size_t o = 0; o < universe.size(); ++o) {
      std::cout << "\"" << splcit::DescribeTSet(model, universe[o]) << "\","
                << splcit::FormatReal(metrics.tuple_frequencies[o]) << "\n";
    }
  }
  return kOk;
}

int Verify(const std::string& model_path, const std::string& suite_path) {
  const splcit::FeatureModel model = splcit::LoadModel(model_path);
  const splcit::CoveringArray array = splcit::LoadCoveringArray(model, suite_path);
  const splcit::TSetUniverse universe = splcit::EnumerateValidTSets(model, array.t);
  const splcit::VerificationResult result =
      splcit::VerifyCoveringArray(model, universe, array.products);
  if (result.ok()) {
    std::cout << "OK: " << array.products.size() << " valid products cover all "
              << universe.size() << " valid " << array.t << "-sets\n";
    return kOk;
  }
  for (std::size_t row : result.invalid_rows) {
    std::cout << "invalid product at row " << row + 1 << "\n";
  }
  for (const splcit::TSet& ts : result.uncovered) {
    std::cout << "uncovered: " << splcit::DescribeTSet(model, ts) << "\n";
  }
  std::cout << "FAIL: " << result.invalid_rows.size() << " invalid rows, "
            << result.uncovered.size() << " uncovered " << array.t << "-sets\n";
  return kVerification;
}

int Bench(splcit::BenchmarkConfig config, const std::string& output, int workers,
          int runs) {
  if (!output.empty()) config.output_dir = output;
  if (workers >= 0) config.workers = workers;
  if (runs > 0) config.runs = runs;
  if (config.output_dir.empty()) {
    std::cerr << "error: no output directory (use -o or output_dir)\n";
    return kUsage;
  }
  const splcit::ComparisonReport report = splcit::RunBenchmark(config);
  splcit::EmitReports(report, config.output_dir);
  std::cerr << "wrote " << report.runs.size() << " runs over " << report.models.size()
            << " models to " << config.output_dir << "\n";
  for (const splcit::SkippedModel& s : report.skipped) {
    std::cerr << "skipped " << s.path << ": " << s.reason << "\n";
  }
  return report.skipped.empty() ? kOk : kParse;
}

int Synth(const splcit::SyntheticModelSpec& spec, const std::string& output) {
  const std::string text = splcit::SerializeModel(splcit::MakeSyntheticModel(spec));
  if (output.empty() || output == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(output, std::ios::binary);
  out << text;
  if (!out.flush()) throw splcit::Error(splcit::ErrorCode::kIo, "cannot write " + output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise covering arrays for feature models"};
  app.require_subcommand(1);
  int status = kOk;

  std::string model_path, suite_path, output;
  std::uint64_t cap = splcit::kDefaultEnumerationCap;

  CLI::App* analyze = app.add_subcommand("analyze", "Report NF, NP, |TS| and core/dead features");
  analyze->add_option("model", model_path, "feature model (.fm)")->required();
  analyze->add_option("--cap", cap, "product enumeration cap");
  analyze->callback([&] { status = Analyze(model_path, cap); });

  CLI::App* products = app.add_subcommand("products", "List every valid product");
  products->add_option("model", model_path, "feature model (.fm)")->required();
  products->add_option("--cap", cap, "product enumeration cap");
  products->callback([&] { status = Products(model_path, cap); });

  std::string algo = "greedy";
  int t = 2;
  splcit::GeneratorConfig gc;
  CLI::App* generate = app.add_subcommand("generate", "Generate a t-wise covering array");
  generate->add_option("model", model_path, "feature model (.fm)")->required();
  generate->add_option("--algo", algo, "greedy | annealing | genetic")
      ->check(CLI::IsMember({"greedy", "annealing", "genetic"}));
  generate->add_option("--t", t, "interaction strength")->check(CLI::Range(1, 16));
  generate->add_option("--seed", gc.seed, "random seed");
  generate->add_option("-o,--output", output, "output .ca file (default stdout)");
  AddGeneratorOptions(generate, gc);
  generate->callback([&] { status = GenerateCmd(model_path, algo, t, gc, output); });

  bool frequencies = false;
  CLI::App* metrics = app.add_subcommand("metrics", "Compute suite metrics as a CSV row");
  metrics->add_option("model", model_path, "feature model (.fm)")->required();
  metrics->add_option("suite", suite_path, "covering array (.ca)")->required();
  metrics->add_flag("--frequencies", frequencies, "also print every tuple frequency");
  metrics->callback([&] { status = Metrics(model_path, suite_path, frequencies); });

  CLI::App* verify = app.add_subcommand("verify", "Check validity and full coverage");
  verify->add_option("model", model_path, "feature model (.fm)")->required();
  verify->add_option("suite", suite_path, "covering array (.ca)")->required();
  verify->callback([&] { status = Verify(model_path, suite_path); });

  std::string config_path;
  int workers = -1;
  int runs = 0;
  CLI::App* bench = app.add_subcommand("bench", "Run the algorithm comparison benchmark");
  bench->add_option("--config", config_path, "benchmark config (.toml)")->required();
  bench->add_option("-o,--output", output, "report directory");
  bench->add_option("--workers", workers, "concurrent runs (0 = hardware threads)")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--runs", runs, "override runs per cell")->check(CLI::PositiveNumber);
  bench->callback([&] {
    status = Bench(splcit::LoadBenchmarkConfig(config_path), output, workers, runs);
  });

  splcit::SyntheticModelSpec spec;
  CLI::App* synth = app.add_subcommand("synth", "Write a synthetic feature model");
  synth->add_option("--features", spec.feature_count, "feature count")
      ->check(CLI::PositiveNumber);
  synth->add_option("--name", spec.name, "model name");
  synth->add_option("--seed", spec.seed, "random seed");
  synth->add_option("--group-rate", spec.group_rate, "probability of a group statement");
  synth->add_option("--xor-share", spec.xor_share, "share of xor groups");
  synth->add_option("--mandatory-share", spec.mandatory_share,
                    "share of mandatory solitary features");
  synth->add_option("--ctc-density", spec.ctc_density, "cross-tree constraints per feature");
  synth->add_option("-o,--output", output, "output .fm file (default stdout)");
  synth->callback([&] { status = Synth(spec, output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const splcit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
