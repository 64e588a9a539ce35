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

// t-sets (partial configurations of t features), the universe of valid
// t-sets of a model, coverage queries, and covering arrays.

#ifndef SPLCIT_TSET_H_
#define SPLCIT_TSET_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splcit/feature_model.h"
#include "splcit/sat.h"

namespace splcit {

class TSet {
 public:
  TSet() = default;
  // Throws splcit::Error(kInvalidArgument) if sel and notsel intersect or
  // contain duplicates.
  TSet(std::vector<int> sel, std::vector<int> notsel);

  // Builds the t-set over `features` (strictly increasing) whose polarity
  // bit k (1 = selected) applies to features[k].
  static TSet FromMask(std::span<const int> features, std::uint32_t mask);

  const std::vector<int>& sel() const { return sel_; }
  const std::vector<int>& notsel() const { return notsel_; }
  int t() const { return static_cast<int>(sel_.size() + notsel_.size()); }

  // Feature indices in increasing order and the matching polarity mask.
  std::vector<int> Features() const;
  std::uint32_t Mask() const;

  std::vector<Literal> ToAssumptions() const;

  friend bool operator==(const TSet&, const TSet&) = default;

 private:
  std::vector<int> sel_;     // sorted
  std::vector<int> notsel_;  // sorted
};

// Throws splcit::Error(kDimensionMismatch) when `ts` mentions a feature
// outside `product`.
bool Covers(const FeatureSet& product, const TSet& ts);

bool IsValidTSet(const FeatureModel& model, const TSet& ts);
bool IsValidTSet(const CnfFormula& cnf, const TSet& ts);

// Fixed-width bitset over universe ordinals.
class CoverageBits {
 public:
  CoverageBits() = default;
  explicit CoverageBits(std::size_t size, bool value = false);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const;
  bool none() const { return count() == 0; }
  // Lowest set index, or size() if none.
  std::size_t first() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// All valid t-sets of one model in canonical order: lexicographic by the
// increasing feature-index tuple, then by polarity mask. Immutable.
class TSetUniverse {
 public:
  int t() const { return t_; }
  int feature_count() const { return feature_count_; }
  std::size_t size() const { return tsets_.size(); }
  const std::vector<TSet>& tsets() const { return tsets_; }
  const TSet& operator[](std::size_t ordinal) const { return tsets_[ordinal]; }

  std::optional<std::size_t> OrdinalOf(const TSet& ts) const;

  // Ordinals of every universe member covered by `product` (ascending).
  // For a valid product this is one t-set per t-combination of features.
  void CoveredBy(std::span<const std::uint8_t> product,
                 std::vector<std::uint32_t>& out) const;
  std::vector<std::uint32_t> CoveredBy(const FeatureSet& product) const;

  // Largest number of valid polarities over any single t-combination of
  // features; no covering array can be smaller.
  std::size_t SizeLowerBound() const;

  friend TSetUniverse EnumerateValidTSets(const FeatureModel&, int);
  friend TSetUniverse UniverseFromProducts(const FeatureModel&,
                                           std::span<const FeatureSet>, int);

 private:
  TSetUniverse(int feature_count, int t);
  std::uint64_t Slot(std::span<const int> features, std::uint32_t mask) const;
  void Finish();

  int t_ = 0;
  int feature_count_ = 0;
  std::vector<TSet> tsets_;
  // Dense table from (combination rank, mask) to ordinal + 1; 0 = invalid.
  std::vector<std::uint32_t> slots_;
  // binomial_[n][k] for n <= feature_count, k <= t.
  std::vector<std::vector<std::uint64_t>> binomial_;
};

// Every valid t-set of `model`, one satisfiability query per candidate not
// already witnessed by an earlier solution. Throws
// splcit::Error(kInvalidArgument) if t < 1 or the model is too large for a
// dense index. A t larger than the feature count yields an empty universe.
TSetUniverse EnumerateValidTSets(const FeatureModel& model, int t);

// Universe built from t-sets covered by `products`. Equal to
// EnumerateValidTSets when `products` are all valid products.
TSetUniverse UniverseFromProducts(const FeatureModel& model,
                                  std::span<const FeatureSet> products, int t);

// Universe members covered by no product, in canonical order.
std::vector<TSet> CoverageGap(const TSetUniverse& universe,
                              std::span<const FeatureSet> products);

struct GenerationMeta {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::int64_t generation_ms = 0;
};

struct CoveringArray {
  std::vector<FeatureSet> products;
  int t = 2;
  GenerationMeta meta;
};

// Covering-array text format:
//   ca <model-name> t=<t> algo=<name> seed=<u64> ms=<int>
//   <selected feature names in canonical order, space separated>   (per row)
std::string SerializeCoveringArray(const FeatureModel& model,
                                   const CoveringArray& array);
// Throws splcit::ParseError on malformed text, unknown feature names or a
// model-name mismatch.
CoveringArray ParseCoveringArray(const FeatureModel& model,
                                 std::string_view text);
CoveringArray LoadCoveringArray(const FeatureModel& model,
                                const std::string& path);
void SaveCoveringArray(const FeatureModel& model, const CoveringArray& array,
                       const std::string& path);

struct VerificationResult {
  std::vector<std::size_t> invalid_rows;
  std::vector<TSet> uncovered;
  bool ok() const { return invalid_rows.empty() && uncovered.empty(); }
};

VerificationResult VerifyCoveringArray(const FeatureModel& model,
                                       const TSetUniverse& universe,
                                       std::span<const FeatureSet> products);

std::string DescribeTSet(const FeatureModel& model, const TSet& ts);

}  // namespace splcit

#endif  // SPLCIT_TSET_H_
