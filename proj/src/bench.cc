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

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <thread>

#include "splcit/error.h"

namespace splcit {
namespace {

struct LoadedModel {
  ModelInfo info;
  std::unique_ptr<Problem> problem;
  FeatureClassification classes;
};

std::vector<Algorithm> SortedAlgorithms(std::vector<Algorithm> algorithms) {
  std::sort(algorithms.begin(), algorithms.end(), [](Algorithm a, Algorithm b) {
    return AlgorithmName(a) < AlgorithmName(b);
  });
  return algorithms;
}

std::vector<LoadedModel> LoadModels(const BenchmarkConfig& config,
                                    std::vector<SkippedModel>& skipped) {
  std::vector<LoadedModel> loaded;
  std::map<std::string, std::string> seen;
  for (const std::string& path : config.model_paths) {
    try {
      FeatureModel model = LoadModel(path);
      if (const auto it = seen.find(model.name()); it != seen.end()) {
        skipped.push_back({path, "duplicate model name '" + model.name() +
                                     "' (also in " + it->second + ")"});
        continue;
      }
      LoadedModel m;
      m.classes = ClassifyFeaturesWithSolver(model);
      m.info.name = model.name();
      m.info.path = path;
      m.info.features = model.size();
      try {
        m.info.products = CountProducts(model, config.enumeration_cap);
      } catch (const CapExceededError&) {
        m.info.products.reset();
      }
      m.info.model = std::make_shared<const FeatureModel>(model);
      m.problem = std::make_unique<Problem>(std::move(model), config.t);
      m.info.tsets = m.problem->universe().size();
      seen.emplace(m.info.name, path);
      loaded.push_back(std::move(m));
    } catch (const Error& e) {
      skipped.push_back({path, e.what()});
    }
  }
  std::sort(loaded.begin(), loaded.end(), [](const LoadedModel& a, const LoadedModel& b) {
    return a.info.name < b.info.name;
  });
  return loaded;
}

RunRecord RunCell(const LoadedModel& m, Algorithm algorithm, int run,
                  const BenchmarkConfig& config) {
  GeneratorConfig gc = config.generator;
  gc.seed = config.base_seed + static_cast<std::uint64_t>(run);
  const Problem& problem = *m.problem;
  CoveringArray array = Generate(problem, algorithm, gc);
  const VerificationResult check =
      VerifyCoveringArray(problem.model(), problem.universe(), array.products);
  if (!check.ok()) {
    throw Error(ErrorCode::kVerification,
                "incomplete covering array: model=" + m.info.name +
                    " algorithm=" + std::string(AlgorithmName(algorithm)) +
                    " seed=" + std::to_string(gc.seed) + " (" +
                    std::to_string(check.invalid_rows.size()) + " invalid rows, " +
                    std::to_string(check.uncovered.size()) + " uncovered t-sets)");
  }
  const SuiteMetrics metrics = ComputeSuiteMetrics(m.classes, problem.universe(), array);
  RunRecord r;
  r.model = m.info.name;
  r.algorithm = algorithm;
  r.run = run;
  r.seed = gc.seed;
  r.size = metrics.size;
  r.generation_ms = metrics.generation_ms;
  r.similarity = metrics.similarity;
  r.mean_tuple_frequency = metrics.mean_tuple_frequency;
  r.histogram = metrics.frequency_histogram;
  r.array = std::move(array);
  return r;
}

double Mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

struct CellValues {
  std::vector<double> size;
  std::vector<double> ms;
  std::vector<double> similarity;
};

const std::vector<double>& Metric(const CellValues& c, std::string_view metric) {
  if (metric == "size") return c.size;
  if (metric == "performance") return c.ms;
  return c.similarity;
}

}  // namespace

ComparisonReport RunBenchmark(const BenchmarkConfig& config) {
  config.Validate();
  ComparisonReport report;
  report.t = config.t;
  std::vector<LoadedModel> models = LoadModels(config, report.skipped);
  const std::vector<Algorithm> algorithms = SortedAlgorithms(config.algorithms);

  struct Cell {
    std::size_t model;
    Algorithm algorithm;
    int run;
  };
  std::vector<Cell> cells;
  for (std::size_t m = 0; m < models.size(); ++m) {
    for (Algorithm a : algorithms) {
      for (int r = 0; r < config.runs; ++r) cells.push_back({m, a, r});
    }
  }

  std::vector<RunRecord> records(cells.size());
  std::vector<std::exception_ptr> failures(cells.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        records[i] = RunCell(models[cells[i].model], cells[i].algorithm, cells[i].run,
                             config);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::size_t workers = config.workers > 0
                            ? static_cast<std::size_t>(config.workers)
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, cells.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  for (LoadedModel& m : models) report.models.push_back(std::move(m.info));
  report.runs = std::move(records);
  Aggregate(report);
  return report;
}

void Aggregate(ComparisonReport& report) {
  report.summary.clear();
  report.pairwise.clear();
  report.correlations = {};

  // (model, algorithm) -> values, keeping first-seen order of both keys.
  std::vector<std::string> model_order;
  std::vector<Algorithm> algorithm_order;
  std::map<std::pair<std::string, Algorithm>, CellValues> cells;
  for (const RunRecord& r : report.runs) {
    if (std::find(model_order.begin(), model_order.end(), r.model) == model_order.end()) {
      model_order.push_back(r.model);
    }
    if (std::find(algorithm_order.begin(), algorithm_order.end(), r.algorithm) ==
        algorithm_order.end()) {
      algorithm_order.push_back(r.algorithm);
    }
    CellValues& c = cells[{r.model, r.algorithm}];
    c.size.push_back(static_cast<double>(r.size));
    c.ms.push_back(static_cast<double>(r.generation_ms));
    c.similarity.push_back(r.similarity);
  }

  for (const std::string& model : model_order) {
    for (Algorithm a : algorithm_order) {
      const auto it = cells.find({model, a});
      if (it == cells.end()) continue;
      const CellValues& c = it->second;
      report.summary.push_back(
          {model, a, c.size.size(), Mean(c.size), Mean(c.ms), Mean(c.similarity)});
    }
  }

  if (algorithm_order.size() >= 2) {
    std::map<Algorithm, CellValues> pooled;
    for (const auto& [key, c] : cells) {
      CellValues& p = pooled[key.second];
      p.size.insert(p.size.end(), c.size.begin(), c.size.end());
      p.ms.insert(p.ms.end(), c.ms.begin(), c.ms.end());
      p.similarity.insert(p.similarity.end(), c.similarity.begin(), c.similarity.end());
    }
    const auto compare = [&](const std::string& model, const auto& lookup) {
      for (std::string_view metric : {"size", "performance", "similarity"}) {
        for (Algorithm a : algorithm_order) {
          for (Algorithm b : algorithm_order) {
            if (a == b) continue;
            const CellValues* ca = lookup(a);
            const CellValues* cb = lookup(b);
            if (ca == nullptr || cb == nullptr) continue;
            report.pairwise.push_back({model, std::string(metric), a, b,
                                       CompareSamples(Metric(*ca, metric),
                                                      Metric(*cb, metric))});
          }
        }
      }
    };
    for (const std::string& model : model_order) {
      compare(model, [&](Algorithm a) -> const CellValues* {
        const auto it = cells.find({model, a});
        return it == cells.end() ? nullptr : &it->second;
      });
    }
    compare(std::string(kPooledModel), [&](Algorithm a) -> const CellValues* {
      return &pooled.at(a);
    });
  }

  std::map<std::string, const ModelInfo*> infos;
  for (const ModelInfo& m : report.models) infos[m.name] = &m;
  std::array<std::vector<double>, kCorrelationVariables> columns;
  for (const RunRecord& r : report.runs) {
    const auto it = infos.find(r.model);
    const ModelInfo* info = it == infos.end() ? nullptr : it->second;
    // A model over the enumeration cap ranks above every counted one.
    const double products =
        info == nullptr ? 0.0
        : info->products ? static_cast<double>(*info->products)
                         : std::numeric_limits<double>::max();
    columns[0].push_back(products);
    columns[1].push_back(info == nullptr ? 0.0 : info->features);
    columns[2].push_back(static_cast<double>(r.size));
    columns[3].push_back(static_cast<double>(r.generation_ms));
    columns[4].push_back(r.similarity);
  }
  for (int i = 0; i < kCorrelationVariables; ++i) {
    report.correlations.values[i][i] = 1.0;
    for (int j = i + 1; j < kCorrelationVariables; ++j) {
      std::optional<double> rho;
      if (report.runs.size() >= 2) {
        try {
          rho = Spearman(columns[i], columns[j]);
        } catch (const Error&) {
          rho.reset();
        }
      }
      report.correlations.values[i][j] = rho;
      report.correlations.values[j][i] = rho;
    }
  }
}

}  // namespace splcit
