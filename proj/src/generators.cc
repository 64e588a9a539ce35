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

#include <cmath>
#include <numeric>

#include "generator_internal.h"
#include "splcit/error.h"
#include "splcit/rng.h"

namespace splcit {

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kAnnealing:
      return "annealing";
    case Algorithm::kGenetic:
      return "genetic";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "annealing") return Algorithm::kAnnealing;
  if (name == "genetic") return Algorithm::kGenetic;
  return std::nullopt;
}

void GeneratorConfig::Validate() const {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
  };
  const auto rate = [](double r) { return std::isfinite(r) && r >= 0.0 && r <= 1.0; };
  require(std::isfinite(annealing.initial_temperature) &&
              annealing.initial_temperature > 0.0,
          "annealing initial temperature must be positive");
  require(annealing.cooling_factor > 0.0 && annealing.cooling_factor < 1.0,
          "annealing cooling factor must lie in (0, 1)");
  require(annealing.moves_per_temperature > 0,
          "annealing moves per temperature must be positive");
  require(annealing.min_temperature > 0.0 &&
              annealing.min_temperature < annealing.initial_temperature,
          "annealing min temperature must lie in (0, initial temperature)");
  require(annealing.max_restarts > 0, "annealing max restarts must be positive");
  require(genetic.population_size > 0, "genetic population size must be positive");
  require(rate(genetic.crossover_rate), "genetic crossover rate must lie in [0, 1]");
  require(!genetic.mutation_rate || rate(*genetic.mutation_rate),
          "genetic mutation rate must lie in [0, 1]");
  require(genetic.generations_per_product > 0,
          "genetic generations per product must be positive");
  require(greedy.candidate_pool >= 0, "greedy candidate pool must be >= 0");
}

Problem::Problem(FeatureModel model, int t)
    : model_(std::move(model)),
      cnf_(ToCnf(model_)),
      universe_(EnumerateValidTSets(model_, t)) {}

Problem::Problem(FeatureModel model, TSetUniverse universe)
    : model_(std::move(model)), cnf_(ToCnf(model_)), universe_(std::move(universe)) {
  if (universe_.feature_count() != model_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "universe built for another model");
  }
}

namespace internal {

Row FirstProduct(Solver& solver, const FeatureModel& model) {
  if (!solver.Solve({})) {
    throw Error(ErrorCode::kInvalidArgument,
                "model '" + model.name() + "' is void: it has no valid products");
  }
  return solver.model();
}

CoveringArray MakeArray(std::vector<Row> rows, int t, Algorithm algorithm,
                        const GeneratorConfig& config, const Stopwatch& clock) {
  CoveringArray array;
  array.t = t;
  array.products.reserve(rows.size());
  for (Row& r : rows) array.products.emplace_back(std::move(r));
  array.meta.algorithm = std::string(AlgorithmName(algorithm));
  array.meta.seed = config.seed;
  array.meta.generation_ms = clock.ElapsedMs();
  return array;
}

std::vector<Row> GreedyRows(const Problem& problem, const GeneratorConfig& config,
                            Solver& solver) {
  const TSetUniverse& universe = problem.universe();
  const int n = problem.model().size();
  std::vector<Row> rows;
  Row current = FirstProduct(solver, problem.model());
  if (universe.size() == 0) {
    rows.push_back(std::move(current));
    return rows;
  }

  // Ties between equally useful t-sets are broken by this seeded order.
  std::vector<std::uint32_t> order(universe.size());
  std::iota(order.begin(), order.end(), 0U);
  Rng rng(config.seed);
  rng.Shuffle(std::span(order));

  CoverageBits uncovered(universe.size(), true);
  std::size_t remaining = universe.size();
  std::vector<Literal> assumptions;
  std::vector<std::int8_t> fixed(n);
  std::vector<std::uint32_t> covered;

  while (remaining > 0) {
    assumptions.clear();
    std::fill(fixed.begin(), fixed.end(), -1);
    bool have_model = false;
    int examined = 0;
    for (std::uint32_t o : order) {
      if (!uncovered.test(o)) continue;
      if (config.greedy.candidate_pool > 0 &&
          examined >= config.greedy.candidate_pool) {
        break;
      }
      ++examined;
      const TSet& ts = universe[o];
      bool clash = false;
      bool already = true;
      const auto check = [&](int f, bool on) {
        if (fixed[f] < 0) {
          already = false;
        } else if ((fixed[f] == 1) != on) {
          clash = true;
        }
      };
      for (int f : ts.sel()) check(f, true);
      for (int f : ts.notsel()) check(f, false);
      if (clash || already) continue;

      bool compatible = have_model;
      if (have_model) {
        for (int f : ts.sel()) compatible = compatible && current[f];
        for (int f : ts.notsel()) compatible = compatible && !current[f];
      }
      if (!compatible) {
        const std::size_t base = assumptions.size();
        for (int f : ts.sel()) assumptions.push_back(Literal::Positive(f));
        for (int f : ts.notsel()) assumptions.push_back(Literal::Negative(f));
        const bool sat = solver.Solve(
            assumptions, have_model ? std::span<const std::uint8_t>(current)
                                    : std::span<const std::uint8_t>());
        assumptions.erase(assumptions.begin() + static_cast<std::ptrdiff_t>(base),
                          assumptions.end());
        if (!sat) continue;
        current = solver.model();
        have_model = true;
      }
      for (int f : ts.sel()) {
        assumptions.push_back(Literal::Positive(f));
        fixed[f] = 1;
      }
      for (int f : ts.notsel()) {
        assumptions.push_back(Literal::Negative(f));
        fixed[f] = 0;
      }
    }
    universe.CoveredBy(current, covered);
    for (std::uint32_t o : covered) {
      if (uncovered.test(o)) {
        uncovered.reset(o);
        --remaining;
      }
    }
    rows.push_back(current);
  }
  return rows;
}

}  // namespace internal

CoveringArray GenerateGreedy(const Problem& problem, const GeneratorConfig& config) {
  config.Validate();
  internal::Stopwatch clock;
  Solver solver(problem.cnf());
  return internal::MakeArray(internal::GreedyRows(problem, config, solver),
                             problem.t(), Algorithm::kGreedy, config, clock);
}

CoveringArray Generate(const Problem& problem, Algorithm algorithm,
                       const GeneratorConfig& config) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return GenerateGreedy(problem, config);
    case Algorithm::kAnnealing:
      return GenerateAnnealing(problem, config);
    case Algorithm::kGenetic:
      return GenerateGenetic(problem, config);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

}  // namespace splcit
