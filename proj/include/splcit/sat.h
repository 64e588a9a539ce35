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

// Propositional encoding of feature models and a small DPLL solver.
//
// Variables are feature indices. The solver branches on the lowest-index
// unassigned variable, so enumeration visits solutions in lexicographic
// order of the canonical feature order (unselected before selected).

#ifndef SPLCIT_SAT_H_
#define SPLCIT_SAT_H_

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "splcit/feature_model.h"

namespace splcit {

// A signed variable reference. Positive means "selected".
class Literal {
 public:
  static constexpr Literal Positive(int var) { return Literal(var + 1); }
  static constexpr Literal Negative(int var) { return Literal(-(var + 1)); }
  static constexpr Literal Of(int var, bool selected) {
    return selected ? Positive(var) : Negative(var);
  }
  // DIMACS convention: nonzero, |dimacs| - 1 is the variable.
  static constexpr Literal FromDimacs(int dimacs) { return Literal(dimacs); }

  constexpr int var() const { return std::abs(value_) - 1; }
  constexpr bool positive() const { return value_ > 0; }
  constexpr int dimacs() const { return value_; }
  constexpr Literal operator~() const { return Literal(-value_); }

  friend constexpr bool operator==(Literal, Literal) = default;
  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  constexpr explicit Literal(int value) : value_(value) {}
  int value_;
};

// Assumptions are literals forced for a single query.
using Assumption = Literal;

class CnfFormula {
 public:
  // Throws splcit::Error(kInvalidArgument) on an empty clause, an
  // out-of-range variable or a clause containing a literal and its negation.
  CnfFormula(int variable_count, std::vector<std::vector<Literal>> clauses);

  int variable_count() const { return variable_count_; }
  const std::vector<std::vector<Literal>>& clauses() const { return clauses_; }

  bool Evaluate(std::span<const std::uint8_t> assignment) const;

 private:
  int variable_count_;
  std::vector<std::vector<Literal>> clauses_;
};

// Satisfying assignments of the result are exactly the valid products.
CnfFormula ToCnf(const FeatureModel& model);

// "p cnf V C" header followed by one zero-terminated clause per line.
std::string ToDimacs(const CnfFormula& cnf);

// DPLL with two-watched-literal unit propagation and chronological
// backtracking. Owns all search state; one instance per thread.
class Solver {
 public:
  explicit Solver(const CnfFormula& cnf);

  // Decides satisfiability under `assumptions`. `phase`, when non-empty,
  // gives the polarity tried first for each variable (nonzero = selected),
  // so the model found agrees with it on the longest possible prefix.
  bool Solve(std::span<const Literal> assumptions,
             std::span<const std::uint8_t> phase = {});

  // Assignment from the last successful Solve().
  const std::vector<std::uint8_t>& model() const { return model_; }

  // Visits every satisfying assignment in lexicographic order. The visitor
  // returns false to stop early. Returns the number of assignments visited.
  std::uint64_t ForEachSolution(
      const std::function<bool(std::span<const std::uint8_t>)>& visit);

 private:
  struct Decision {
    std::size_t trail_size;
    int lit;
    bool flipped;
  };

  int LitValue(int lit) const {
    const int v = value_[lit >> 1];
    return v < 0 ? -1 : (v ^ (lit & 1));
  }
  void Assign(int lit);
  void UndoTo(std::size_t trail_size);
  bool Propagate();
  bool Backtrack(std::size_t fixed_levels);
  int NextUnassigned() const;
  void Reset();

  int variable_count_;
  std::vector<int> clause_start_;
  std::vector<int> clause_lits_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> units_;
  std::vector<int8_t> value_;
  std::vector<int> trail_;
  std::size_t queue_head_ = 0;
  std::vector<Decision> decisions_;
  bool root_conflict_ = false;
  std::size_t root_trail_size_ = 0;
  std::vector<std::uint8_t> model_;
};

bool IsSatisfiable(const CnfFormula& cnf, std::span<const Assumption> assumptions);

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

// All valid products in lexicographic order. Throws CapExceededError when
// the model has more than `cap` products.
std::vector<FeatureSet> EnumerateProducts(const FeatureModel& model,
                                          std::uint64_t cap = kDefaultEnumerationCap);

// Same count as EnumerateProducts(model).size() without storing products.
std::uint64_t CountProducts(const FeatureModel& model,
                            std::uint64_t cap = kDefaultEnumerationCap);

// Core/variant/dead split via one satisfiability query per feature and
// polarity; needs no enumeration. Throws splcit::Error(kInvalidArgument) on
// a void model.
FeatureClassification ClassifyFeaturesWithSolver(const FeatureModel& model);

}  // namespace splcit

#endif  // SPLCIT_SAT_H_
