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

#include "splcit/sat.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "splcit/error.h"
#include "splcit/rng.h"
#include "test_util.h"

namespace splcit {
namespace {

using ::splcit::testing::Gpl;
using ::splcit::testing::Idx;
using ::testing::HasSubstr;

std::vector<Literal> Lits(std::initializer_list<int> dimacs) {
  std::vector<Literal> out;
  for (int d : dimacs) out.push_back(Literal::FromDimacs(d));
  return out;
}

TEST(LiteralTest, Encoding) {
  EXPECT_EQ(Literal::Positive(0).dimacs(), 1);
  EXPECT_EQ(Literal::Negative(4).dimacs(), -5);
  EXPECT_EQ((~Literal::Positive(3)), Literal::Negative(3));
  EXPECT_EQ(Literal::Of(2, false).var(), 2);
  EXPECT_FALSE(Literal::Of(2, false).positive());
}

TEST(CnfFormulaTest, RejectsMalformedClauses) {
  EXPECT_THROW(CnfFormula(2, {{}}), Error);
  EXPECT_THROW(CnfFormula(2, {Lits({3})}), Error);
  EXPECT_THROW(CnfFormula(2, {Lits({1, -1})}), Error);
  EXPECT_NO_THROW(CnfFormula(2, {Lits({1, -2})}));
}

TEST(ToCnfTest, RootOnlyIsSingleUnit) {
  const CnfFormula cnf = ToCnf(ParseModel("model m\nroot R\n"));
  EXPECT_EQ(cnf.variable_count(), 1);
  ASSERT_EQ(cnf.clauses().size(), 1u);
  EXPECT_EQ(cnf.clauses()[0], Lits({1}));
}

TEST(ToCnfTest, DimacsExport) {
  const std::string text = ToDimacs(ToCnf(ParseModel("model m\nroot R\noptional A R\n")));
  EXPECT_EQ(text, "p cnf 2 2\n1 0\n-2 1 0\n");
}

TEST(ToCnfTest, SolutionsEqualBruteForceProducts) {
  for (const FeatureModel& m : testing::SmallSyntheticModels(12)) {
    const CnfFormula cnf = ToCnf(m);
    std::vector<FeatureSet> from_cnf;
    testing::ForEachAssignment(m.size(), [&](const FeatureSet& fs) {
      if (cnf.Evaluate(fs.bits())) from_cnf.push_back(fs);
    });
    EXPECT_EQ(from_cnf, testing::BruteForceProducts(m)) << m.name();
  }
}

TEST(IsSatisfiableTest, GplExamples) {
  const CnfFormula cnf = ToCnf(Gpl());
  const std::vector<Literal> kruskal_dfs = {Literal::Positive(Idx(Gpl(), "Kruskal")),
                                            Literal::Positive(Idx(Gpl(), "DFS"))};
  EXPECT_TRUE(IsSatisfiable(cnf, kruskal_dfs));
  const std::vector<Literal> neither = {Literal::Negative(Idx(Gpl(), "Directed")),
                                        Literal::Negative(Idx(Gpl(), "Undirected"))};
  EXPECT_FALSE(IsSatisfiable(cnf, neither));
  EXPECT_TRUE(IsSatisfiable(cnf, {}));
}

TEST(IsSatisfiableTest, AssumptionsAreMonotone) {
  const CnfFormula cnf = ToCnf(Gpl());
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Literal> assumptions;
    bool was_sat = true;
    for (int step = 0; step < 6; ++step) {
      const int var = static_cast<int>(rng.Below(Gpl().size()));
      assumptions.push_back(Literal::Of(var, rng.Bernoulli(0.5)));
      const bool sat = IsSatisfiable(cnf, assumptions);
      if (!was_sat) EXPECT_FALSE(sat);
      was_sat = sat;
    }
  }
}

TEST(IsSatisfiableTest, ContradictoryAssumptions) {
  const CnfFormula cnf = ToCnf(Gpl());
  const std::vector<Literal> both = {Literal::Positive(3), Literal::Negative(3)};
  EXPECT_FALSE(IsSatisfiable(cnf, both));
}

TEST(SolverTest, ModelSatisfiesFormulaAndAssumptions) {
  const CnfFormula cnf = ToCnf(Gpl());
  Solver solver(cnf);
  const std::vector<Literal> a = {Literal::Positive(Idx(Gpl(), "Prim"))};
  ASSERT_TRUE(solver.Solve(a));
  EXPECT_TRUE(cnf.Evaluate(solver.model()));
  EXPECT_TRUE(solver.model()[Idx(Gpl(), "Prim")]);
}

TEST(SolverTest, PhaseIsFollowedWhenConsistent) {
  const CnfFormula cnf = ToCnf(Gpl());
  Solver solver(cnf);
  for (const FeatureSet& fs : testing::GplSampleSets()) {
    std::vector<std::uint8_t> phase(fs.bits().begin(), fs.bits().end());
    ASSERT_TRUE(solver.Solve({}, phase));
    EXPECT_EQ(solver.model(), phase);
  }
}

TEST(SolverTest, ReusableAcrossQueries) {
  const CnfFormula cnf = ToCnf(Gpl());
  Solver solver(cnf);
  const std::vector<Literal> bad = {Literal::Negative(4), Literal::Negative(5)};
  const std::vector<Literal> good = {Literal::Positive(4)};
  for (int i = 0; i < 5; ++i) {
    EXPECT_FALSE(solver.Solve(bad));
    EXPECT_TRUE(solver.Solve(good));
  }
}

TEST(SolverTest, ForEachSolutionStopsEarly) {
  Solver solver(ToCnf(Gpl()));
  int seen = 0;
  solver.ForEachSolution([&](std::span<const std::uint8_t>) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(SolverTest, UnsatisfiableFormula) {
  const CnfFormula cnf(1, {Lits({1}), Lits({-1})});
  Solver solver(cnf);
  EXPECT_FALSE(solver.Solve({}));
  EXPECT_EQ(solver.ForEachSolution([](auto) { return true; }), 0u);
}

TEST(EnumerateProductsTest, GplHas73Products) {
  const std::vector<FeatureSet> products = EnumerateProducts(Gpl());
  EXPECT_EQ(products.size(), 73u);
  EXPECT_EQ(CountProducts(Gpl()), 73u);
  EXPECT_TRUE(std::is_sorted(products.begin(), products.end()));
  for (const FeatureSet& p : products) EXPECT_TRUE(ValidateFeatureSet(Gpl(), p));
}

TEST(EnumerateProductsTest, EqualsBruteForceOnSmallModels) {
  for (const FeatureModel& m : testing::SmallSyntheticModels(16)) {
    EXPECT_EQ(EnumerateProducts(m), testing::BruteForceProducts(m)) << m.name();
  }
}

TEST(EnumerateProductsTest, OptionalChildrenClosedForm) {
  std::string text = "model m\nroot R\n";
  for (int i = 0; i < 10; ++i) text += "optional C" + std::to_string(i) + " R\n";
  EXPECT_EQ(CountProducts(ParseModel(text)), 1024u);
}

TEST(EnumerateProductsTest, CapExceeded) {
  std::string text = "model m\nroot R\n";
  for (int i = 0; i < 10; ++i) text += "optional C" + std::to_string(i) + " R\n";
  const FeatureModel m = ParseModel(text);
  EXPECT_EQ(CountProducts(m, 1024), 1024u);
  try {
    CountProducts(m, 1023);
    FAIL();
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
    EXPECT_EQ(e.cap(), 1023u);
    EXPECT_THAT(e.what(), HasSubstr("1023"));
  }
  EXPECT_THROW(EnumerateProducts(m, 10), CapExceededError);
}

TEST(EnumerateProductsTest, VoidModelHasNone) {
  const FeatureModel m = ParseModel(
      "model m\nroot R\nmandatory A R\nmandatory B R\nexcludes A B\n");
  EXPECT_TRUE(EnumerateProducts(m).empty());
  EXPECT_THROW(ClassifyFeaturesWithSolver(m), Error);
}

}  // namespace
}  // namespace splcit
