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

// t-wise covering-array generators.
//
//   greedy     builds one product at a time by accepting uncovered t-sets,
//              in a seeded random order, while they stay jointly
//              satisfiable (a set-cover greedy in the style of ICPL).
//   annealing  searches for complete arrays of a fixed size with simulated
//              annealing, choosing the size by binary search below an upper
//              bound that only ever decreases (in the style of CASA).
//   genetic    builds one product at a time, each one the fittest
//              individual of a short genetic algorithm whose fitness is the
//              number of newly covered t-sets (in the style of PGS).
//
// All three are deterministic functions of (model, t, config).

#ifndef SPLCIT_GENERATORS_H_
#define SPLCIT_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "splcit/feature_model.h"
#include "splcit/sat.h"
#include "splcit/tset.h"

namespace splcit {

enum class Algorithm { kGreedy, kAnnealing, kGenetic };

std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct AnnealingParams {
  double initial_temperature = 1.0;
  double cooling_factor = 0.97;
  int moves_per_temperature = 500;
  double min_temperature = 1e-3;
  // Number of narrowing passes; the first is a full binary search, later
  // ones retry one below the best size found so far.
  int max_restarts = 3;
};

struct GeneticParams {
  int population_size = 50;
  double crossover_rate = 0.9;
  // Per-feature flip probability; unset means 1 / feature count.
  std::optional<double> mutation_rate;
  int generations_per_product = 100;
};

struct GreedyParams {
  // Uncovered t-sets examined per product; 0 scans all of them.
  int candidate_pool = 0;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  AnnealingParams annealing;
  GeneticParams genetic;
  GreedyParams greedy;

  // Throws splcit::Error(kInvalidArgument) on out-of-range parameters.
  void Validate() const;
};

// The precomputed inputs shared by all runs on one (model, t).
class Problem {
 public:
  Problem(FeatureModel model, int t);
  Problem(FeatureModel model, TSetUniverse universe);

  const FeatureModel& model() const { return model_; }
  const CnfFormula& cnf() const { return cnf_; }
  const TSetUniverse& universe() const { return universe_; }
  int t() const { return universe_.t(); }

 private:
  FeatureModel model_;
  CnfFormula cnf_;
  TSetUniverse universe_;
};

// Each generator returns a complete covering array of valid products with
// at least one row; meta.generation_ms is the wall-clock time spent inside
// the generator (always >= 1). Throws splcit::Error(kInvalidArgument) for a
// void model or an invalid config.
CoveringArray GenerateGreedy(const Problem& problem, const GeneratorConfig& config);
CoveringArray GenerateAnnealing(const Problem& problem, const GeneratorConfig& config);
CoveringArray GenerateGenetic(const Problem& problem, const GeneratorConfig& config);
CoveringArray Generate(const Problem& problem, Algorithm algorithm,
                       const GeneratorConfig& config);

}  // namespace splcit

#endif  // SPLCIT_GENERATORS_H_
