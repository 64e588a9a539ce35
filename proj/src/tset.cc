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

#include "splcit/tset.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include "splcit/error.h"

namespace splcit {
namespace {

constexpr std::uint64_t kMaxSlots = std::uint64_t{1} << 28;

// Visits every strictly increasing t-combination of [0, n) in lexicographic
// order.
template <typename Visitor>
void ForEachCombination(int n, int t, Visitor&& visit) {
  if (t > n || t <= 0) return;
  std::vector<int> c(t);
  for (int k = 0; k < t; ++k) c[k] = k;
  while (true) {
    visit(std::span<const int>(c));
    int k = t - 1;
    while (k >= 0 && c[k] == n - t + k) --k;
    if (k < 0) return;
    ++c[k];
    for (int j = k + 1; j < t; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

TSet::TSet(std::vector<int> sel, std::vector<int> notsel)
    : sel_(std::move(sel)), notsel_(std::move(notsel)) {
  std::sort(sel_.begin(), sel_.end());
  std::sort(notsel_.begin(), notsel_.end());
  std::vector<int> all;
  std::set_union(sel_.begin(), sel_.end(), notsel_.begin(), notsel_.end(),
                 std::back_inserter(all));
  if (std::adjacent_find(sel_.begin(), sel_.end()) != sel_.end() ||
      std::adjacent_find(notsel_.begin(), notsel_.end()) != notsel_.end() ||
      all.size() != sel_.size() + notsel_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "t-set selected and unselected features must be disjoint");
  }
  if (!all.empty() && all.front() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative feature index");
  }
}

TSet TSet::FromMask(std::span<const int> features, std::uint32_t mask) {
  std::vector<int> sel, notsel;
  for (std::size_t k = 0; k < features.size(); ++k) {
    ((mask >> k) & 1U ? sel : notsel).push_back(features[k]);
  }
  return TSet(std::move(sel), std::move(notsel));
}

std::vector<int> TSet::Features() const {
  std::vector<int> all;
  std::merge(sel_.begin(), sel_.end(), notsel_.begin(), notsel_.end(),
             std::back_inserter(all));
  return all;
}

std::uint32_t TSet::Mask() const {
  const std::vector<int> all = Features();
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (std::binary_search(sel_.begin(), sel_.end(), all[k])) {
      mask |= 1U << k;
    }
  }
  return mask;
}

std::vector<Literal> TSet::ToAssumptions() const {
  std::vector<Literal> lits;
  for (int f : sel_) lits.push_back(Literal::Positive(f));
  for (int f : notsel_) lits.push_back(Literal::Negative(f));
  return lits;
}

bool Covers(const FeatureSet& product, const TSet& ts) {
  const auto in_range = [&](const std::vector<int>& v) {
    return v.empty() || v.back() < product.size();
  };
  if (!in_range(ts.sel()) || !in_range(ts.notsel())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "t-set references a feature outside the feature set");
  }
  return std::all_of(ts.sel().begin(), ts.sel().end(),
                     [&](int f) { return product.selected(f); }) &&
         std::none_of(ts.notsel().begin(), ts.notsel().end(),
                      [&](int f) { return product.selected(f); });
}

bool IsValidTSet(const CnfFormula& cnf, const TSet& ts) {
  return IsSatisfiable(cnf, ts.ToAssumptions());
}

bool IsValidTSet(const FeatureModel& model, const TSet& ts) {
  return IsValidTSet(ToCnf(model), ts);
}

// ---------------------------------------------------------------------------
// CoverageBits

CoverageBits::CoverageBits(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  if (value && (size & 63) != 0) {
    words_.back() = (std::uint64_t{1} << (size & 63)) - 1;
  }
}

std::size_t CoverageBits::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::size_t CoverageBits::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
  }
  return size_;
}

// ---------------------------------------------------------------------------
// TSetUniverse

TSetUniverse::TSetUniverse(int feature_count, int t)
    : t_(t), feature_count_(feature_count) {
  if (t < 1 || t > 16) {
    throw Error(ErrorCode::kInvalidArgument, "t must be in [1, 16]");
  }
  binomial_.assign(feature_count + 1, std::vector<std::uint64_t>(t + 1, 0));
  for (int n = 0; n <= feature_count; ++n) {
    binomial_[n][0] = 1;
    for (int k = 1; k <= t && k <= n; ++k) {
      binomial_[n][k] = binomial_[n - 1][k - 1] + (k <= n - 1 ? binomial_[n - 1][k] : 0);
    }
  }
  const std::uint64_t combos = t <= feature_count ? binomial_[feature_count][t] : 0;
  const std::uint64_t slots = combos << t;
  if (slots > kMaxSlots) {
    throw Error(ErrorCode::kInvalidArgument,
                "model too large for t=" + std::to_string(t) + " coverage index");
  }
  slots_.assign(slots, 0);
}

// Colex rank of the combination, times 2^t, plus the polarity mask.
std::uint64_t TSetUniverse::Slot(std::span<const int> features,
                                 std::uint32_t mask) const {
  std::uint64_t rank = 0;
  for (std::size_t k = 0; k < features.size(); ++k) {
    rank += binomial_[features[k]][k + 1];
  }
  return (rank << t_) | mask;
}

void TSetUniverse::Finish() {
  // slots_ holds 1 for valid entries; assign ordinals in canonical order.
  tsets_.clear();
  const std::uint32_t masks = 1U << t_;
  ForEachCombination(feature_count_, t_, [&](std::span<const int> c) {
    const std::uint64_t base = Slot(c, 0);
    for (std::uint32_t m = 0; m < masks; ++m) {
      if (slots_[base | m] != 0) {
        tsets_.push_back(TSet::FromMask(c, m));
        slots_[base | m] = static_cast<std::uint32_t>(tsets_.size());
      }
    }
  });
}

std::optional<std::size_t> TSetUniverse::OrdinalOf(const TSet& ts) const {
  if (ts.t() != t_) return std::nullopt;
  const std::vector<int> features = ts.Features();
  if (!features.empty() && features.back() >= feature_count_) return std::nullopt;
  const std::uint32_t v = slots_[Slot(features, ts.Mask())];
  if (v == 0) return std::nullopt;
  return v - 1;
}

void TSetUniverse::CoveredBy(std::span<const std::uint8_t> product,
                             std::vector<std::uint32_t>& out) const {
  out.clear();
  if (static_cast<int>(product.size()) != feature_count_) {
    throw Error(ErrorCode::kDimensionMismatch, "product size mismatch");
  }
  if (t_ == 2) {
    for (int i = 0; i < feature_count_; ++i) {
      const std::uint32_t low = product[i] ? 1U : 0U;
      for (int j = i + 1; j < feature_count_; ++j) {
        const std::uint64_t rank = static_cast<std::uint64_t>(j) * (j - 1) / 2 + i;
        const std::uint32_t v = slots_[(rank << 2) | (product[j] ? 2U : 0U) | low];
        if (v != 0) out.push_back(v - 1);
      }
    }
    return;
  }
  ForEachCombination(feature_count_, t_, [&](std::span<const int> c) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (product[c[k]]) mask |= 1U << k;
    }
    const std::uint32_t v = slots_[Slot(c, mask)];
    if (v != 0) out.push_back(v - 1);
  });
}

std::vector<std::uint32_t> TSetUniverse::CoveredBy(const FeatureSet& product) const {
  std::vector<std::uint32_t> out;
  CoveredBy(product.bits(), out);
  return out;
}

std::size_t TSetUniverse::SizeLowerBound() const {
  std::size_t best = 0;
  std::size_t run = 0;
  std::vector<int> previous;
  for (const TSet& ts : tsets_) {
    std::vector<int> features = ts.Features();
    if (features == previous) {
      ++run;
    } else {
      run = 1;
      previous = std::move(features);
    }
    best = std::max(best, run);
  }
  return best;
}

TSetUniverse EnumerateValidTSets(const FeatureModel& model, int t) {
  TSetUniverse universe(model.size(), t);
  if (t > model.size()) return universe;
  const CnfFormula cnf = ToCnf(model);
  Solver solver(cnf);

  // A candidate already covered by an earlier solution needs no query.
  std::vector<std::uint8_t> seen(universe.slots_.size(), 0);
  const auto mark_solution = [&](std::span<const std::uint8_t> product) {
    ForEachCombination(model.size(), t, [&](std::span<const int> c) {
      std::uint32_t mask = 0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (product[c[k]]) mask |= 1U << k;
      }
      seen[universe.Slot(c, mask)] = 1;
    });
  };

  const std::uint32_t masks = 1U << t;
  std::vector<Literal> assumptions(t, Literal::Positive(0));
  ForEachCombination(model.size(), t, [&](std::span<const int> c) {
    const std::uint64_t base = universe.Slot(c, 0);
    for (std::uint32_t m = 0; m < masks; ++m) {
      if (seen[base | m]) continue;
      for (int k = 0; k < t; ++k) assumptions[k] = Literal::Of(c[k], (m >> k) & 1U);
      if (solver.Solve(assumptions)) mark_solution(solver.model());
    }
  });
  for (std::size_t s = 0; s < seen.size(); ++s) universe.slots_[s] = seen[s];
  universe.Finish();
  return universe;
}

TSetUniverse UniverseFromProducts(const FeatureModel& model,
                                  std::span<const FeatureSet> products, int t) {
  TSetUniverse universe(model.size(), t);
  if (t > model.size()) return universe;
  for (const FeatureSet& p : products) {
    if (p.size() != model.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "product size mismatch");
    }
    ForEachCombination(model.size(), t, [&](std::span<const int> c) {
      std::uint32_t mask = 0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (p.selected(c[k])) mask |= 1U << k;
      }
      universe.slots_[universe.Slot(c, mask)] = 1;
    });
  }
  universe.Finish();
  return universe;
}

std::vector<TSet> CoverageGap(const TSetUniverse& universe,
                              std::span<const FeatureSet> products) {
  CoverageBits covered(universe.size());
  std::vector<std::uint32_t> ordinals;
  for (const FeatureSet& p : products) {
    universe.CoveredBy(p.bits(), ordinals);
    for (std::uint32_t o : ordinals) covered.set(o);
  }
  std::vector<TSet> gap;
  for (std::size_t o = 0; o < universe.size(); ++o) {
    if (!covered.test(o)) gap.push_back(universe[o]);
  }
  return gap;
}

// ---------------------------------------------------------------------------
// Covering-array files

std::string SerializeCoveringArray(const FeatureModel& model,
                                   const CoveringArray& array) {
  std::ostringstream out;
  out << "ca " << model.name() << " t=" << array.t
      << " algo=" << array.meta.algorithm << " seed=" << array.meta.seed
      << " ms=" << array.meta.generation_ms << "\n";
  for (const FeatureSet& p : array.products) {
    bool first = true;
    for (int i : p.sel()) {
      out << (first ? "" : " ") << model.feature(i).name;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

template <typename Int>
Int ParseField(std::string_view token, std::string_view key, int line) {
  const std::string prefix = std::string(key) + "=";
  if (token.substr(0, prefix.size()) != prefix) {
    throw ParseError("expected '" + prefix + "...'", line, 1);
  }
  const std::string_view digits = token.substr(prefix.size());
  Int value{};
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed value for '" + std::string(key) + "'", line, 1);
  }
  return value;
}

std::vector<std::string_view> SplitWords(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

}  // namespace

CoveringArray ParseCoveringArray(const FeatureModel& model,
                                 std::string_view text) {
  CoveringArray array;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto words = SplitWords(line);
    if (words.empty()) continue;
    if (!have_header) {
      if (words.size() != 6 || words[0] != "ca") {
        throw ParseError(
            "expected header 'ca <model> t=<t> algo=<name> seed=<n> ms=<n>'",
            line_no, 1);
      }
      if (words[1] != model.name()) {
        throw ParseError("covering array is for model '" + std::string(words[1]) +
                             "', not '" + model.name() + "'",
                         line_no, 4);
      }
      array.t = ParseField<int>(words[2], "t", line_no);
      if (words[3].substr(0, 5) != "algo=" || words[3].size() == 5) {
        throw ParseError("expected 'algo=<name>'", line_no, 1);
      }
      array.meta.algorithm = std::string(words[3].substr(5));
      array.meta.seed = ParseField<std::uint64_t>(words[4], "seed", line_no);
      array.meta.generation_ms = ParseField<std::int64_t>(words[5], "ms", line_no);
      have_header = true;
      continue;
    }
    std::vector<std::uint8_t> bits(model.size(), 0);
    std::size_t column = 1;
    for (std::string_view w : words) {
      auto index = model.IndexOf(w);
      if (!index) {
        column = static_cast<std::size_t>(w.data() - line.data()) + 1;
        throw ParseError("unknown feature '" + std::string(w) + "'", line_no,
                         static_cast<int>(column));
      }
      bits[*index] = 1;
    }
    array.products.emplace_back(std::move(bits));
  }
  if (!have_header) throw ParseError("missing covering-array header", 1, 1);
  return array;
}

CoveringArray LoadCoveringArray(const FeatureModel& model,
                                const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseCoveringArray(model, buffer.str());
}

void SaveCoveringArray(const FeatureModel& model, const CoveringArray& array,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << SerializeCoveringArray(model, array);
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

VerificationResult VerifyCoveringArray(const FeatureModel& model,
                                       const TSetUniverse& universe,
                                       std::span<const FeatureSet> products) {
  VerificationResult result;
  std::vector<FeatureSet> valid;
  for (std::size_t r = 0; r < products.size(); ++r) {
    if (products[r].size() == model.size() &&
        ValidateFeatureSet(model, products[r])) {
      valid.push_back(products[r]);
    } else {
      result.invalid_rows.push_back(r);
    }
  }
  result.uncovered = CoverageGap(universe, valid);
  return result;
}

std::string DescribeTSet(const FeatureModel& model, const TSet& ts) {
  const auto names = [&](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ",";
      s += model.feature(v[k]).name;
    }
    return s + "}";
  };
  return "[" + names(ts.sel()) + "," + names(ts.notsel()) + "]";
}

}  // namespace splcit
