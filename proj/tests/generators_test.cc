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

#include "splcit/generators.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "splcit/error.h"
#include "splcit/rng.h"
#include "test_util.h"

namespace splcit {
namespace {

using ::splcit::testing::Gpl;

constexpr Algorithm kAll[] = {Algorithm::kGreedy, Algorithm::kAnnealing,
                              Algorithm::kGenetic};

// Cheaper annealing and genetic settings for the property sweeps.
GeneratorConfig FastConfig(std::uint64_t seed) {
  GeneratorConfig c;
  c.seed = seed;
  c.annealing.moves_per_temperature = 100;
  c.annealing.max_restarts = 1;
  c.genetic.population_size = 20;
  c.genetic.generations_per_product = 20;
  return c;
}

void ExpectComplete(const Problem& p, const CoveringArray& array) {
  ASSERT_FALSE(array.products.empty());
  const VerificationResult r = VerifyCoveringArray(p.model(), p.universe(), array.products);
  EXPECT_TRUE(r.invalid_rows.empty()) << p.model().name() << " " << array.meta.algorithm;
  EXPECT_TRUE(r.uncovered.empty()) << p.model().name() << " " << array.meta.algorithm;
  EXPECT_GE(array.products.size(), p.universe().SizeLowerBound());
}

TEST(AlgorithmTest, NamesRoundTrip) {
  for (Algorithm a : kAll) EXPECT_EQ(ParseAlgorithm(AlgorithmName(a)), a);
  EXPECT_EQ(ParseAlgorithm("casa"), std::nullopt);
}

TEST(GeneratorConfigTest, ValidationRejectsBadParameters) {
  EXPECT_NO_THROW(GeneratorConfig{}.Validate());
  GeneratorConfig c;
  c.annealing.cooling_factor = 1.0;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.genetic.mutation_rate = 1.5;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.genetic.population_size = 0;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.greedy.candidate_pool = -1;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.annealing.min_temperature = 2.0;
  EXPECT_THROW(c.Validate(), Error);
}

TEST(GenerateTest, GplArraysAreCompleteForEveryAlgorithm) {
  const Problem p(Gpl(), 2);
  for (Algorithm a : kAll) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      GeneratorConfig c;
      c.seed = seed;
      const CoveringArray array = Generate(p, a, c);
      ExpectComplete(p, array);
      EXPECT_EQ(array.meta.algorithm, AlgorithmName(a));
      EXPECT_EQ(array.meta.seed, seed);
      EXPECT_GE(array.meta.generation_ms, 1);
      EXPECT_EQ(array.t, 2);
    }
  }
}

TEST(GenerateTest, DeterministicInSeed) {
  const Problem p(Gpl(), 2);
  for (Algorithm a : kAll) {
    const CoveringArray x = Generate(p, a, FastConfig(11));
    const CoveringArray y = Generate(p, a, FastConfig(11));
    EXPECT_EQ(x.products, y.products) << AlgorithmName(a);
  }
}

TEST(GenerateTest, CompleteOnSyntheticModelsAndStrengths) {
  for (const FeatureModel& m : testing::SmallSyntheticModels(12)) {
    for (int t : {1, 2, 3}) {
      const Problem p(m, t);
      for (Algorithm a : kAll) ExpectComplete(p, Generate(p, a, FastConfig(3)));
    }
  }
}

TEST(GenerateTest, EmptyUniverseStillYieldsOneValidProduct) {
  const Problem p(ParseModel("model m\nroot R\n"), 2);
  ASSERT_EQ(p.universe().size(), 0u);
  for (Algorithm a : kAll) {
    const CoveringArray array = Generate(p, a, FastConfig(0));
    ASSERT_EQ(array.products.size(), 1u);
    EXPECT_TRUE(ValidateFeatureSet(p.model(), array.products[0]));
  }
}

TEST(GenerateTest, VoidModelRejected) {
  const Problem p(ParseModel("model m\nroot R\nmandatory A R\nmandatory B R\nexcludes A B\n"),
                  2);
  for (Algorithm a : kAll) EXPECT_THROW(Generate(p, a, FastConfig(0)), Error);
}

TEST(GenerateTest, InvalidConfigRejected) {
  const Problem p(Gpl(), 2);
  GeneratorConfig c;
  c.annealing.moves_per_temperature = 0;
  EXPECT_THROW(Generate(p, Algorithm::kAnnealing, c), Error);
}

TEST(GenerateTest, OptionalChildrenNeedExactlyTwoRowsPairwise) {
  std::string text = "model m\nroot R\n";
  for (int i = 0; i < 3; ++i) text += "optional C" + std::to_string(i) + " R\n";
  const Problem p(ParseModel(text), 2);
  EXPECT_EQ(p.universe().SizeLowerBound(), 4u);
  const CoveringArray array = Generate(p, Algorithm::kAnnealing, GeneratorConfig{});
  EXPECT_EQ(array.products.size(), 4u);
}

TEST(GenerateTest, AnnealingNoLargerThanGreedyOnGpl) {
  const Problem p(Gpl(), 2);
  double greedy = 0, annealing = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GeneratorConfig c;
    c.seed = seed;
    greedy += GenerateGreedy(p, c).products.size();
    annealing += GenerateAnnealing(p, c).products.size();
  }
  EXPECT_LE(annealing, greedy);
}

TEST(GenerateTest, GreedyCandidatePoolStillComplete) {
  const Problem p(Gpl(), 2);
  GeneratorConfig c;
  c.greedy.candidate_pool = 5;
  ExpectComplete(p, GenerateGreedy(p, c));
}

TEST(RngTest, ReproducibleAndBounded) {
  Rng a(5), b(5), c(6);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.Next();
    EXPECT_EQ(x, b.Next());
    EXPECT_LT(c.Below(7), 7u);
    const double u = c.Uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace splcit
