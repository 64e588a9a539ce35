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

#include "splcit/synthetic.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "splcit/sat.h"

namespace splcit {
namespace {

SyntheticModelSpec Spec(int features, std::uint64_t seed) {
  SyntheticModelSpec spec;
  spec.name = "s";
  spec.feature_count = features;
  spec.group_rate = 0.4;
  spec.ctc_density = 0.2;
  spec.seed = seed;
  return spec;
}

TEST(SyntheticModelTest, DeterministicInSeed) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::string a = SerializeModel(MakeSyntheticModel(Spec(20, seed)));
    EXPECT_EQ(a, SerializeModel(MakeSyntheticModel(Spec(20, seed))));
  }
  EXPECT_NE(SerializeModel(MakeSyntheticModel(Spec(20, 0))),
            SerializeModel(MakeSyntheticModel(Spec(20, 1))));
}

TEST(SyntheticModelTest, StructureIsWellFormed) {
  for (int n = 1; n <= 30; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const FeatureModel m = MakeSyntheticModel(Spec(n, seed));
      ASSERT_EQ(m.size(), n);
      EXPECT_EQ(m.name(), "s");
      for (int f = 1; f < m.size(); ++f) EXPECT_LT(m.feature(f).parent, f);
      for (const FeatureGroup& g : m.groups()) {
        EXPECT_GE(g.members.size(), 2u);
        EXPECT_LE(g.members.size(), 4u);
        for (std::size_t i = 1; i < g.members.size(); ++i) {
          EXPECT_EQ(g.members[i], g.members[i - 1] + 1);
        }
      }
      EXPECT_EQ(ParseModel(SerializeModel(m)).FeatureList(), m.FeatureList());
    }
  }
}

TEST(SyntheticModelTest, NeverVoidAndNoDeadFeatures) {
  for (int n = 2; n <= 24; n += 2) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const FeatureModel m = MakeSyntheticModel(Spec(n, seed));
      const FeatureClassification c = ClassifyFeaturesWithSolver(m);
      EXPECT_TRUE(c.dead.empty()) << n << " " << seed;
    }
  }
}

TEST(SyntheticModelTest, ConstraintDensityBoundsCtcCount) {
  SyntheticModelSpec spec = Spec(30, 2);
  spec.ctc_density = 0.0;
  EXPECT_TRUE(MakeSyntheticModel(spec).constraints().empty());
  spec.ctc_density = 0.2;
  EXPECT_LE(MakeSyntheticModel(spec).constraints().size(), 6u);
}

TEST(SyntheticModelTest, RejectsBadSpec) {
  SyntheticModelSpec spec;
  spec.feature_count = 0;
  EXPECT_ANY_THROW(MakeSyntheticModel(spec));
  spec = {};
  spec.group_rate = 1.5;
  EXPECT_ANY_THROW(MakeSyntheticModel(spec));
}

}  // namespace
}  // namespace splcit
