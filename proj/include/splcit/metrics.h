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

// Test-suite metrics: size, generation time, variant-feature similarity
// and per-t-set tuple frequency.

#ifndef SPLCIT_METRICS_H_
#define SPLCIT_METRICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "splcit/feature_model.h"
#include "splcit/tset.h"

namespace splcit {

inline constexpr int kHistogramBuckets = 10;
using FrequencyHistogram = std::array<std::size_t, kHistogramBuckets>;

std::size_t TestSuiteSize(const CoveringArray& array);

// Selected features of `product` that are variant in the model.
std::vector<int> VariantFeatures(const FeatureSet& product,
                                 const FeatureClassification& classes);
std::vector<int> VariantFeatures(const FeatureSet& product, const FeatureModel& model);

// Jaccard index of the two products' selected variant features, or 0 when
// neither selects any variant feature.
double Similarity(const FeatureSet& a, const FeatureSet& b,
                  const FeatureClassification& classes);

// Mean Similarity over all ordered pairs (i, j) of the suite, diagonal
// included. Throws splcit::Error(kUndefinedMetric) on an empty suite.
double TestSuiteSimilarity(std::span<const FeatureSet> suite,
                           const FeatureClassification& classes);

// Fraction of the suite's products covering `ts`. Throws
// splcit::Error(kUndefinedMetric) on an empty suite.
double TupleFrequency(const TSet& ts, std::span<const FeatureSet> suite);

// TupleFrequency of every universe member, in canonical order.
std::vector<double> TupleFrequencies(const TSetUniverse& universe,
                                     std::span<const FeatureSet> suite);

// Mean of TupleFrequencies by direct summation; nullopt when the universe
// is empty. Throws splcit::Error(kUndefinedMetric) on an empty suite.
std::optional<double> MeanTupleFrequency(const TSetUniverse& universe,
                                         std::span<const FeatureSet> suite);

// For a suite of valid products every t-combination of features contributes
// exactly one covered valid t-set per product, so the mean tuple frequency
// is C(feature_count, t) / universe_size regardless of the suite; for t = 2
// that is |FL|(|FL|-1) / (2|TS|).
double ClosedFormMeanTupleFrequency(int feature_count, int t,
                                    std::size_t universe_size);

// Bucket k counts frequencies in [k/10, (k+1)/10); 1.0 lands in the last
// bucket. Computed from integer cover counts to avoid rounding at edges.
FrequencyHistogram TupleFrequencyHistogram(const TSetUniverse& universe,
                                           std::span<const FeatureSet> suite);

struct SuiteMetrics {
  std::size_t size = 0;
  std::int64_t generation_ms = 0;
  double similarity = 0.0;
  std::vector<double> tuple_frequencies;
  FrequencyHistogram frequency_histogram{};
  std::optional<double> mean_tuple_frequency;
};

SuiteMetrics ComputeSuiteMetrics(const FeatureClassification& classes,
                                 const TSetUniverse& universe,
                                 const CoveringArray& array);

// Shortest decimal text that parses back to the same double.
std::string FormatReal(double value);

// CSV columns: model, algorithm, seed, size, generation_ms, similarity,
// mean_tuple_frequency, h0..h9. An inapplicable mean is written as "NA".
std::string MetricsCsvHeader();
std::string MetricsCsvRow(const std::string& model_name, const CoveringArray& array,
                          const SuiteMetrics& metrics);

}  // namespace splcit

#endif  // SPLCIT_METRICS_H_
