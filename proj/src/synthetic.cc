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

#include <algorithm>
#include <cmath>

#include "splcit/error.h"
#include "splcit/rng.h"
#include "splcit/sat.h"

namespace splcit {
namespace {

bool IsAncestor(const std::vector<Feature>& features, int ancestor, int node) {
  while (node > 0) {
    node = features[node].parent;
    if (node == ancestor) return true;
  }
  return false;
}

}  // namespace

FeatureModel MakeSyntheticModel(const SyntheticModelSpec& spec) {
  if (spec.feature_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic model needs >= 1 feature");
  }
  for (double rate : {spec.group_rate, spec.xor_share, spec.mandatory_share, spec.ctc_density}) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "synthetic model rates must lie in [0, 1]");
    }
  }
  Rng rng(spec.seed);
  const int n = spec.feature_count;
  std::vector<Feature> features;
  std::vector<FeatureGroup> groups;
  const auto name = [](int i) { return "F" + std::to_string(i); };
  features.push_back({name(0)});

  while (static_cast<int>(features.size()) < n) {
    const int parent = static_cast<int>(rng.Below(features.size()));
    const int left = n - static_cast<int>(features.size());
    if (left >= 2 && rng.Bernoulli(spec.group_rate)) {
      const int members = 2 + static_cast<int>(rng.Below(std::min(3, left - 1)));
      const bool is_xor = rng.Bernoulli(spec.xor_share);
      FeatureGroup group{parent, is_xor ? GroupKind::kXor : GroupKind::kOr, {}};
      const int id = static_cast<int>(groups.size());
      for (int k = 0; k < members; ++k) {
        const int index = static_cast<int>(features.size());
        features.push_back({name(index), parent,
                            is_xor ? Relation::kXorMember : Relation::kOrMember, id});
        group.members.push_back(index);
      }
      groups.push_back(std::move(group));
    } else {
      const int index = static_cast<int>(features.size());
      features.push_back({name(index), parent,
                          rng.Bernoulli(spec.mandatory_share) ? Relation::kMandatory
                                                              : Relation::kOptional});
    }
  }

  std::vector<CrossTreeConstraint> constraints;
  const int wanted = static_cast<int>(std::lround(spec.ctc_density * n));
  for (int attempt = 0; attempt < 10 * wanted && n > 2 &&
                        static_cast<int>(constraints.size()) < wanted;
       ++attempt) {
    const int a = 1 + static_cast<int>(rng.Below(n - 1));
    const int b = 1 + static_cast<int>(rng.Below(n - 1));
    const ConstraintKind kind =
        rng.Bernoulli(0.7) ? ConstraintKind::kRequires : ConstraintKind::kExcludes;
    if (a == b || IsAncestor(features, a, b) || IsAncestor(features, b, a)) continue;
    const bool duplicate = std::any_of(
        constraints.begin(), constraints.end(), [&](const CrossTreeConstraint& c) {
          return (c.source == a && c.target == b) || (c.source == b && c.target == a);
        });
    if (duplicate) continue;
    constraints.push_back({kind, a, b});
    const FeatureModel candidate =
        FeatureModel::Create(spec.name, features, groups, constraints);
    bool keep = false;
    try {
      keep = ClassifyFeaturesWithSolver(candidate).dead.empty();
    } catch (const Error&) {
      keep = false;  // void
    }
    if (!keep) constraints.pop_back();
  }
  return FeatureModel::Create(spec.name, std::move(features), std::move(groups),
                              std::move(constraints));
}

}  // namespace splcit
