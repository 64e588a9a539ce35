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

#include "generator_internal.h"
#include "splcit/rng.h"

namespace splcit {
namespace {

using internal::Row;

struct Individual {
  Row genes;
  std::size_t fitness = 0;
};

class ProductEvolver {
 public:
  ProductEvolver(const Problem& problem, const GeneticParams& params,
                 Solver& solver, Rng& rng)
      : problem_(problem),
        params_(params),
        solver_(solver),
        rng_(rng),
        mutation_rate_(params.mutation_rate.value_or(
            1.0 / static_cast<double>(problem.model().size()))) {}

  // Evolves one product maximizing the number of t-sets it would newly
  // cover.
  Individual Evolve(const CoverageBits& uncovered) {
    const int n = problem_.model().size();
    const std::size_t size = static_cast<std::size_t>(params_.population_size);
    std::vector<Individual> population;
    population.reserve(size);
    Row genes(n);
    for (std::size_t i = 0; i < size; ++i) {
      for (int f = 0; f < n; ++f) genes[f] = rng_.Next() >> 63;
      population.push_back(Make(genes, uncovered));
    }

    std::vector<Individual> next;
    next.reserve(size);
    for (int g = 0; g < params_.generations_per_product; ++g) {
      next.clear();
      next.push_back(Best(population));
      while (next.size() < size) {
        const Individual& a = Tournament(population);
        const Individual& b = Tournament(population);
        if (rng_.Bernoulli(params_.crossover_rate)) {
          for (int f = 0; f < n; ++f) {
            genes[f] = (rng_.Next() >> 63) ? a.genes[f] : b.genes[f];
          }
        } else {
          genes = a.genes;
        }
        for (int f = 0; f < n; ++f) {
          if (rng_.Bernoulli(mutation_rate_)) genes[f] ^= 1;
        }
        next.push_back(Make(genes, uncovered));
      }
      population.swap(next);
    }
    return Best(population);
  }

 private:
  // Repairs `genes` to the nearest valid product and scores it.
  Individual Make(const Row& genes, const CoverageBits& uncovered) {
    Individual ind;
    solver_.Solve({}, genes);
    ind.genes = solver_.model();
    problem_.universe().CoveredBy(ind.genes, scratch_);
    for (std::uint32_t o : scratch_) ind.fitness += uncovered.test(o);
    return ind;
  }

  const Individual& Tournament(const std::vector<Individual>& population) {
    const Individual& a = population[rng_.Below(population.size())];
    const Individual& b = population[rng_.Below(population.size())];
    return b.fitness > a.fitness ? b : a;
  }

  static const Individual& Best(const std::vector<Individual>& population) {
    const Individual* best = &population.front();
    for (const Individual& ind : population) {
      if (ind.fitness > best->fitness) best = &ind;
    }
    return *best;
  }

  const Problem& problem_;
  const GeneticParams& params_;
  Solver& solver_;
  Rng& rng_;
  double mutation_rate_;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace

CoveringArray GenerateGenetic(const Problem& problem, const GeneratorConfig& config) {
  config.Validate();
  internal::Stopwatch clock;
  Solver solver(problem.cnf());
  const TSetUniverse& universe = problem.universe();
  std::vector<Row> rows;
  Row first = internal::FirstProduct(solver, problem.model());
  if (universe.size() == 0) {
    rows.push_back(std::move(first));
    return internal::MakeArray(std::move(rows), problem.t(), Algorithm::kGenetic,
                               config, clock);
  }

  Rng rng(config.seed);
  ProductEvolver evolver(problem, config.genetic, solver, rng);
  CoverageBits uncovered(universe.size(), true);
  std::size_t remaining = universe.size();
  std::vector<std::uint32_t> covered;
  while (remaining > 0) {
    Individual best = evolver.Evolve(uncovered);
    if (best.fitness == 0) {
      // Fall back to a witness for the first uncovered t-set.
      solver.Solve(universe[uncovered.first()].ToAssumptions());
      best.genes = solver.model();
    }
    universe.CoveredBy(best.genes, covered);
    for (std::uint32_t o : covered) {
      if (uncovered.test(o)) {
        uncovered.reset(o);
        --remaining;
      }
    }
    rows.push_back(std::move(best.genes));
  }
  return internal::MakeArray(std::move(rows), problem.t(), Algorithm::kGenetic,
                             config, clock);
}

}  // namespace splcit
