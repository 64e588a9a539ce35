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

#include "splcit/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "splcit/error.h"

namespace splcit {
namespace {

void RequireSample(std::span<const double> values, const char* what) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": empty sample");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": non-finite value");
    }
  }
}

// Two-sided exact p-value: the rank sum of a size-n1 subset of {1..N} is
// tabulated by dynamic programming over ranks.
double ExactRankSumPValue(std::size_t n1, std::size_t n, double observed) {
  const std::size_t max_sum = n * (n + 1) / 2;
  // ways[k][s]: subsets of size k with rank sum s.
  std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(max_sum + 1, 0.0));
  ways[0][0] = 1.0;
  for (std::size_t rank = 1; rank <= n; ++rank) {
    for (std::size_t k = std::min(rank, n1); k >= 1; --k) {
      for (std::size_t s = max_sum; s >= rank; --s) {
        ways[k][s] += ways[k - 1][s - rank];
      }
    }
  }
  const auto w = static_cast<std::size_t>(std::llround(observed));
  double total = 0.0, at_most = 0.0, at_least = 0.0;
  for (std::size_t s = 0; s <= max_sum; ++s) {
    total += ways[n1][s];
    if (s <= w) at_most += ways[n1][s];
    if (s >= w) at_least += ways[n1][s];
  }
  return std::min(1.0, 2.0 * std::min(at_most, at_least) / total);
}

}  // namespace

void Sample::Validate() const { RequireSample(values, "sample"); }

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double WilcoxonRankSum(std::span<const double> a, std::span<const double> b) {
  RequireSample(a, "wilcoxon");
  RequireSample(b, "wilcoxon");
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<double> ranks = AverageRanks(pooled);
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double n = n1 + n2;
  const double w = std::accumulate(ranks.begin(), ranks.begin() + a.size(), 0.0);

  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  bool ties = false;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    if (t > 1) ties = true;
    tie_term += t * t * t - t;
    i = j;
  }

  if (!ties && pooled.size() <= kExactWilcoxonLimit) {
    return ExactRankSumPValue(a.size(), pooled.size(), w);
  }
  const double mean = n1 * (n + 1.0) / 2.0;
  const double variance = n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (variance <= 0.0) return 1.0;
  const double z = std::max(0.0, std::abs(w - mean) - 0.5) / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

double WilcoxonRankSum(const Sample& a, const Sample& b) {
  return WilcoxonRankSum(a.values, b.values);
}

double A12(std::span<const double> a, std::span<const double> b) {
  RequireSample(a, "a12");
  RequireSample(b, "a12");
  // Count in half-units so both orientations share one integer numerator.
  std::uint64_t wins = 0;
  for (double x : a) {
    for (double y : b) wins += x > y ? 2 : (x == y ? 1 : 0);
  }
  const std::uint64_t denominator = 2 * static_cast<std::uint64_t>(a.size()) * b.size();
  // Divide on the side that is >= 1/2 and complement the other: 1 - q is
  // exact for q in [1/2, 1], so the two orientations sum to exactly 1.
  if (2 * wins >= denominator) {
    return static_cast<double>(wins) / static_cast<double>(denominator);
  }
  return 1.0 - static_cast<double>(denominator - wins) / static_cast<double>(denominator);
}

double A12(const Sample& a, const Sample& b) { return A12(a.values, b.values); }

double Spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "spearman needs two samples of equal size >= 2");
  }
  RequireSample(x, "spearman");
  RequireSample(y, "spearman");
  const std::vector<double> rx = AverageRanks(x);
  const std::vector<double> ry = AverageRanks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kUndefinedMetric,
                "spearman correlation undefined for a constant ranking");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double Spearman(const Sample& x, const Sample& y) { return Spearman(x.values, y.values); }

PairwiseTestResult CompareSamples(std::span<const double> a, std::span<const double> b) {
  return {WilcoxonRankSum(a, b), A12(a, b), a.size(), b.size()};
}

}  // namespace splcit
