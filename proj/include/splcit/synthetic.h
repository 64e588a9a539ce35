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

#ifndef SPLCIT_SYNTHETIC_H_
#define SPLCIT_SYNTHETIC_H_

#include <cstdint>
#include <string>

#include "splcit/feature_model.h"

namespace splcit {

// Parameters of the synthetic model family.
//
// Features are added one statement at a time under a uniformly chosen,
// already declared parent. With probability `group_rate` (and at least two
// features left to place) the statement is a group of 2-4 members, xor with
// probability `xor_share`, otherwise or. Solitary features are mandatory
// with probability `mandatory_share`, otherwise optional. Finally about
// `ctc_density * feature_count` requires/excludes constraints are drawn
// between features that are not ancestors of one another (requires with
// probability 0.7); a constraint that would make the model void or leave a
// dead feature is discarded.
struct SyntheticModelSpec {
  std::string name = "synthetic";
  int feature_count = 10;
  double group_rate = 0.3;
  double xor_share = 0.5;
  double mandatory_share = 0.25;
  double ctc_density = 0.1;
  std::uint64_t seed = 0;
};

// Deterministic in the spec. Features are named F0 (root), F1, ...
FeatureModel MakeSyntheticModel(const SyntheticModelSpec& spec);

}  // namespace splcit

#endif  // SPLCIT_SYNTHETIC_H_
