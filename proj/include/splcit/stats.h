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

// Non-parametric statistics for comparing algorithms over independent runs.

#ifndef SPLCIT_STATS_H_
#define SPLCIT_STATS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace splcit {

inline constexpr double kSignificanceLevel = 0.05;

// Largest pooled sample size for which the Wilcoxon rank-sum p-value is
// computed from the exact null distribution (tie-free data only).
inline constexpr std::size_t kExactWilcoxonLimit = 12;

struct SampleLabel {
  std::string algorithm;
  std::string model;
  std::string metric;
};

// One value per independent run.
struct Sample {
  std::vector<double> values;
  SampleLabel label;

  // Throws splcit::Error(kInvalidArgument) if empty or non-finite.
  void Validate() const;
};

// 1-based ranks of `values`, ties receiving the average of their ranks.
std::vector<double> AverageRanks(std::span<const double> values);

// Two-sided p-value of the Wilcoxon rank-sum (Mann-Whitney) test. Exact for
// tie-free data with |a| + |b| <= kExactWilcoxonLimit, otherwise the normal
// approximation with tie and continuity corrections. Identical pooled
// values give 1.
double WilcoxonRankSum(std::span<const double> a, std::span<const double> b);
double WilcoxonRankSum(const Sample& a, const Sample& b);

// Vargha-Delaney effect size: probability that a run drawn from `a` scores
// higher than one from `b`, ties counting half. A12(a, b) + A12(b, a) == 1
// holds exactly in floating point.
double A12(std::span<const double> a, std::span<const double> b);
double A12(const Sample& a, const Sample& b);

// Spearman rank correlation (Pearson correlation of average ranks). Throws
// splcit::Error(kInvalidArgument) on size mismatch or fewer than 2 values,
// and splcit::Error(kUndefinedMetric) when either ranking is constant.
double Spearman(std::span<const double> x, std::span<const double> y);
double Spearman(const Sample& x, const Sample& y);

struct PairwiseTestResult {
  double p_value = 1.0;
  double a12 = 0.5;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  bool significant() const { return p_value < kSignificanceLevel; }
};

PairwiseTestResult CompareSamples(std::span<const double> a, std::span<const double> b);

}  // namespace splcit

#endif  // SPLCIT_STATS_H_
