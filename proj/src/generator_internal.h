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

#ifndef SPLCIT_SRC_GENERATOR_INTERNAL_H_
#define SPLCIT_SRC_GENERATOR_INTERNAL_H_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "splcit/generators.h"

namespace splcit::internal {

using Row = std::vector<std::uint8_t>;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  // Elapsed milliseconds rounded up, never below 1.
  std::int64_t ElapsedMs() const {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    return std::max<std::int64_t>(1, (us + 999) / 1000);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Throws if the model has no valid product.
Row FirstProduct(Solver& solver, const FeatureModel& model);

// Uncovered universe ordinals with O(1) insert, erase and uniform sampling.
class OrdinalPool {
 public:
  explicit OrdinalPool(std::size_t universe_size)
      : position_(universe_size, kAbsent) {}

  bool contains(std::uint32_t o) const { return position_[o] != kAbsent; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::uint32_t at(std::size_t i) const { return items_[i]; }

  void insert(std::uint32_t o) {
    if (contains(o)) return;
    position_[o] = static_cast<std::uint32_t>(items_.size());
    items_.push_back(o);
  }
  void erase(std::uint32_t o) {
    const std::uint32_t p = position_[o];
    if (p == kAbsent) return;
    const std::uint32_t last = items_.back();
    items_[p] = last;
    position_[last] = p;
    items_.pop_back();
    position_[o] = kAbsent;
  }

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffU;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> items_;
};

// Greedy construction shared by the greedy generator and the annealing
// generator's initial upper bound.
std::vector<Row> GreedyRows(const Problem& problem, const GeneratorConfig& config,
                            Solver& solver);

CoveringArray MakeArray(std::vector<Row> rows, int t, Algorithm algorithm,
                        const GeneratorConfig& config, const Stopwatch& clock);

}  // namespace splcit::internal

#endif  // SPLCIT_SRC_GENERATOR_INTERNAL_H_
