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

#include "splcit/metrics.h"

#include <algorithm>
#include <charconv>

#include "splcit/error.h"
#include "splcit/sat.h"

namespace splcit {
namespace {

void RequireNonEmpty(std::span<const FeatureSet> suite, const char* metric) {
  if (suite.empty()) {
    throw Error(ErrorCode::kUndefinedMetric,
                std::string(metric) + " is undefined for an empty suite");
  }
}

std::vector<std::uint8_t> VariantMask(const FeatureSet& product,
                                      const FeatureClassification& classes) {
  std::vector<std::uint8_t> mask(product.size(), 0);
  for (int f : classes.variant) {
    if (f < product.size() && product.selected(f)) mask[f] = 1;
  }
  return mask;
}

double Jaccard(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  std::size_t both = 0;
  std::size_t either = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    both += a[i] & b[i];
    either += a[i] | b[i];
  }
  return either == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(either);
}

// Number of suite products covering each universe member.
std::vector<std::size_t> CoverCounts(const TSetUniverse& universe,
                                     std::span<const FeatureSet> suite) {
  std::vector<std::size_t> counts(universe.size(), 0);
  std::vector<std::uint32_t> covered;
  for (const FeatureSet& p : suite) {
    universe.CoveredBy(p.bits(), covered);
    for (std::uint32_t o : covered) ++counts[o];
  }
  return counts;
}

}  // namespace

std::size_t TestSuiteSize(const CoveringArray& array) { return array.products.size(); }

std::vector<int> VariantFeatures(const FeatureSet& product,
                                 const FeatureClassification& classes) {
  std::vector<int> out;
  for (int f : classes.variant) {
    if (f < product.size() && product.selected(f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> VariantFeatures(const FeatureSet& product, const FeatureModel& model) {
  return VariantFeatures(product, ClassifyFeaturesWithSolver(model));
}

double Similarity(const FeatureSet& a, const FeatureSet& b,
                  const FeatureClassification& classes) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "feature sets differ in size");
  }
  return Jaccard(VariantMask(a, classes), VariantMask(b, classes));
}

double TestSuiteSimilarity(std::span<const FeatureSet> suite,
                           const FeatureClassification& classes) {
  RequireNonEmpty(suite, "test suite similarity");
  std::vector<std::vector<std::uint8_t>> masks;
  masks.reserve(suite.size());
  for (const FeatureSet& p : suite) masks.push_back(VariantMask(p, classes));
  double total = 0.0;
  for (const auto& a : masks) {
    for (const auto& b : masks) total += Jaccard(a, b);
  }
  const double n = static_cast<double>(suite.size());
  return total / (n * n);
}

double TupleFrequency(const TSet& ts, std::span<const FeatureSet> suite) {
  RequireNonEmpty(suite, "tuple frequency");
  const auto hits = std::count_if(suite.begin(), suite.end(),
                                  [&](const FeatureSet& p) { return Covers(p, ts); });
  return static_cast<double>(hits) / static_cast<double>(suite.size());
}

std::vector<double> TupleFrequencies(const TSetUniverse& universe,
                                     std::span<const FeatureSet> suite) {
  RequireNonEmpty(suite, "tuple frequency");
  const std::vector<std::size_t> counts = CoverCounts(universe, suite);
  std::vector<double> out(counts.size());
  for (std::size_t o = 0; o < counts.size(); ++o) {
    out[o] = static_cast<double>(counts[o]) / static_cast<double>(suite.size());
  }
  return out;
}

std::optional<double> MeanTupleFrequency(const TSetUniverse& universe,
                                         std::span<const FeatureSet> suite) {
  const std::vector<double> freqs = TupleFrequencies(universe, suite);
  if (freqs.empty()) return std::nullopt;
  double sum = 0.0;
  for (double f : freqs) sum += f;
  return sum / static_cast<double>(freqs.size());
}

double ClosedFormMeanTupleFrequency(int feature_count, int t,
                                    std::size_t universe_size) {
  if (universe_size == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "no valid t-sets");
  }
  double combos = 1.0;
  for (int k = 0; k < t; ++k) {
    combos = combos * static_cast<double>(feature_count - k) / static_cast<double>(k + 1);
  }
  return combos / static_cast<double>(universe_size);
}

FrequencyHistogram TupleFrequencyHistogram(const TSetUniverse& universe,
                                           std::span<const FeatureSet> suite) {
  RequireNonEmpty(suite, "tuple frequency");
  FrequencyHistogram histogram{};
  for (std::size_t c : CoverCounts(universe, suite)) {
    const std::size_t bucket = std::min<std::size_t>(
        kHistogramBuckets - 1, c * kHistogramBuckets / suite.size());
    ++histogram[bucket];
  }
  return histogram;
}

SuiteMetrics ComputeSuiteMetrics(const FeatureClassification& classes,
                                 const TSetUniverse& universe,
                                 const CoveringArray& array) {
  SuiteMetrics m;
  m.size = TestSuiteSize(array);
  m.generation_ms = array.meta.generation_ms;
  m.similarity = TestSuiteSimilarity(array.products, classes);
  m.tuple_frequencies = TupleFrequencies(universe, array.products);
  m.frequency_histogram = TupleFrequencyHistogram(universe, array.products);
  m.mean_tuple_frequency = MeanTupleFrequency(universe, array.products);
  return m;
}

std::string FormatReal(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string MetricsCsvHeader() {
  std::string header =
      "model,algorithm,seed,size,generation_ms,similarity,mean_tuple_frequency";
  for (int k = 0; k < kHistogramBuckets; ++k) header += ",h" + std::to_string(k);
  return header;
}

std::string MetricsCsvRow(const std::string& model_name, const CoveringArray& array,
                          const SuiteMetrics& metrics) {
  std::string row = model_name + "," + array.meta.algorithm + "," +
                    std::to_string(array.meta.seed) + "," +
                    std::to_string(metrics.size) + "," +
                    std::to_string(metrics.generation_ms) + "," +
                    FormatReal(metrics.similarity) + "," +
                    (metrics.mean_tuple_frequency
                         ? FormatReal(*metrics.mean_tuple_frequency)
                         : std::string("NA"));
  for (std::size_t h : metrics.frequency_histogram) row += "," + std::to_string(h);
  return row;
}

}  // namespace splcit
