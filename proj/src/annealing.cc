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

#include "generator_internal.h"
#include "splcit/rng.h"

namespace splcit {
namespace {

using internal::OrdinalPool;
using internal::Row;

// Probability that a move targets a random uncovered t-set rather than
// flipping a random feature.
constexpr double kFocusedMoveRate = 0.8;

// Drops rows, fewest uniquely covered t-sets first, until `size` remain.
std::vector<Row> Shrink(const TSetUniverse& universe, std::vector<Row> rows,
                        std::size_t size) {
  std::vector<std::uint32_t> counts(universe.size(), 0);
  std::vector<std::vector<std::uint32_t>> covered(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    universe.CoveredBy(rows[r], covered[r]);
    for (std::uint32_t o : covered[r]) ++counts[o];
  }
  while (rows.size() > size) {
    std::size_t victim = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t unique = 0;
      for (std::uint32_t o : covered[r]) unique += counts[o] == 1;
      if (unique < fewest) {
        fewest = unique;
        victim = r;
      }
    }
    for (std::uint32_t o : covered[victim]) --counts[o];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(victim));
    covered.erase(covered.begin() + static_cast<std::ptrdiff_t>(victim));
  }
  return rows;
}

// Simulated annealing over arrays of fixed size. Energy is the number of
// uncovered t-sets; every row stays a valid product because each move is
// repaired by the solver. Returns true and leaves the complete array in
// `rows` on success.
class FixedSizeAnnealer {
 public:
  FixedSizeAnnealer(const Problem& problem, const AnnealingParams& params,
                    Solver& solver, Rng& rng)
      : problem_(problem), params_(params), solver_(solver), rng_(rng) {}

  bool Run(std::vector<Row>& rows) {
    const TSetUniverse& universe = problem_.universe();
    const int n = problem_.model().size();
    std::vector<std::uint32_t> counts(universe.size(), 0);
    std::vector<std::vector<std::uint32_t>> covered(rows.size());
    OrdinalPool uncovered(universe.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      universe.CoveredBy(rows[r], covered[r]);
      for (std::uint32_t o : covered[r]) ++counts[o];
    }
    for (std::uint32_t o = 0; o < universe.size(); ++o) {
      if (counts[o] == 0) uncovered.insert(o);
    }
    if (uncovered.empty()) return true;

    std::vector<Literal> assumptions;
    std::vector<std::uint32_t> fresh;
    for (double temperature = params_.initial_temperature;
         temperature > params_.min_temperature;
         temperature *= params_.cooling_factor) {
      for (int move = 0; move < params_.moves_per_temperature; ++move) {
        const std::size_t r = rng_.Below(rows.size());
        assumptions.clear();
        if (n == 1 || rng_.Uniform01() < kFocusedMoveRate) {
          const TSet& target = universe[uncovered.at(rng_.Below(uncovered.size()))];
          for (int f : target.sel()) assumptions.push_back(Literal::Positive(f));
          for (int f : target.notsel()) assumptions.push_back(Literal::Negative(f));
        } else {
          const int f = 1 + static_cast<int>(rng_.Below(n - 1));
          assumptions.push_back(Literal::Of(f, !rows[r][f]));
        }
        if (!solver_.Solve(assumptions, rows[r])) continue;
        const Row& candidate = solver_.model();
        if (candidate == rows[r]) continue;

        universe.CoveredBy(candidate, fresh);
        const std::size_t before = uncovered.size();
        for (std::uint32_t o : covered[r]) {
          if (--counts[o] == 0) uncovered.insert(o);
        }
        for (std::uint32_t o : fresh) {
          if (counts[o]++ == 0) uncovered.erase(o);
        }
        const double delta =
            static_cast<double>(uncovered.size()) - static_cast<double>(before);
        if (delta <= 0.0 || rng_.Uniform01() < std::exp(-delta / temperature)) {
          rows[r] = candidate;
          covered[r].swap(fresh);
          if (uncovered.empty()) return true;
        } else {
          for (std::uint32_t o : fresh) {
            if (--counts[o] == 0) uncovered.insert(o);
          }
          for (std::uint32_t o : covered[r]) {
            if (counts[o]++ == 0) uncovered.erase(o);
          }
        }
      }
    }
    return false;
  }

 private:
  const Problem& problem_;
  const AnnealingParams& params_;
  Solver& solver_;
  Rng& rng_;
};

}  // namespace

CoveringArray GenerateAnnealing(const Problem& problem, const GeneratorConfig& config) {
  config.Validate();
  internal::Stopwatch clock;
  Solver solver(problem.cnf());
  const TSetUniverse& universe = problem.universe();

  // The greedy array is the first upper bound.
  std::vector<Row> best = internal::GreedyRows(problem, config, solver);
  Rng rng(config.seed);
  FixedSizeAnnealer annealer(problem, config.annealing, solver, rng);
  const std::size_t lower = std::max<std::size_t>(1, universe.SizeLowerBound());

  const auto attempt = [&](std::size_t size) {
    std::vector<Row> rows = Shrink(universe, best, size);
    if (!annealer.Run(rows)) return false;
    best = std::move(rows);
    return true;
  };

  if (universe.size() > 0) {
    for (int pass = 0; pass < config.annealing.max_restarts; ++pass) {
      if (best.size() <= lower) break;
      if (pass == 0) {
        std::size_t lo = lower;
        while (lo < best.size()) {
          const std::size_t mid = lo + (best.size() - lo) / 2;
          if (!attempt(mid)) lo = mid + 1;
        }
      } else {
        while (best.size() > lower && attempt(best.size() - 1)) {
        }
      }
    }
  }
  return internal::MakeArray(std::move(best), problem.t(), Algorithm::kAnnealing,
                             config, clock);
}

}  // namespace splcit
