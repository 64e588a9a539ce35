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

#include "splcit/sat.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "splcit/error.h"

namespace splcit {
namespace {

// Internal literal code: 2 * var + (negative ? 1 : 0).
int Code(Literal l) { return 2 * l.var() + (l.positive() ? 0 : 1); }

}  // namespace

CnfFormula::CnfFormula(int variable_count,
                       std::vector<std::vector<Literal>> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
  if (variable_count_ < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative variable count");
  }
  for (const auto& clause : clauses_) {
    if (clause.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty clause");
    }
    for (Literal l : clause) {
      if (l.dimacs() == 0 || l.var() >= variable_count_) {
        throw Error(ErrorCode::kInvalidArgument, "literal out of range");
      }
      if (std::find(clause.begin(), clause.end(), ~l) != clause.end()) {
        throw Error(ErrorCode::kInvalidArgument, "tautological clause");
      }
    }
  }
}

bool CnfFormula::Evaluate(std::span<const std::uint8_t> assignment) const {
  if (static_cast<int>(assignment.size()) != variable_count_) {
    throw Error(ErrorCode::kDimensionMismatch, "assignment size mismatch");
  }
  for (const auto& clause : clauses_) {
    const bool sat = std::any_of(clause.begin(), clause.end(), [&](Literal l) {
      return (assignment[l.var()] != 0) == l.positive();
    });
    if (!sat) return false;
  }
  return true;
}

CnfFormula ToCnf(const FeatureModel& model) {
  using L = Literal;
  std::vector<std::vector<Literal>> clauses;
  clauses.push_back({L::Positive(0)});
  for (int i = 1; i < model.size(); ++i) {
    const Feature& f = model.feature(i);
    clauses.push_back({L::Negative(i), L::Positive(f.parent)});
    if (f.relation == Relation::kMandatory) {
      clauses.push_back({L::Negative(f.parent), L::Positive(i)});
    }
  }
  for (const FeatureGroup& g : model.groups()) {
    std::vector<Literal> at_least_one{L::Negative(g.parent)};
    for (int m : g.members) at_least_one.push_back(L::Positive(m));
    clauses.push_back(std::move(at_least_one));
    if (g.kind == GroupKind::kXor) {
      for (std::size_t a = 0; a < g.members.size(); ++a) {
        for (std::size_t b = a + 1; b < g.members.size(); ++b) {
          clauses.push_back({L::Negative(g.members[a]), L::Negative(g.members[b])});
        }
      }
    }
  }
  for (const CrossTreeConstraint& c : model.constraints()) {
    if (c.kind == ConstraintKind::kRequires) {
      clauses.push_back({L::Negative(c.source), L::Positive(c.target)});
    } else {
      clauses.push_back({L::Negative(c.source), L::Negative(c.target)});
    }
  }
  return CnfFormula(model.size(), std::move(clauses));
}

std::string ToDimacs(const CnfFormula& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.variable_count() << " " << cnf.clauses().size() << "\n";
  for (const auto& clause : cnf.clauses()) {
    for (Literal l : clause) out << l.dimacs() << " ";
    out << "0\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Solver

Solver::Solver(const CnfFormula& cnf)
    : variable_count_(cnf.variable_count()),
      watches_(2 * static_cast<std::size_t>(cnf.variable_count())),
      value_(cnf.variable_count(), -1) {
  for (const auto& clause : cnf.clauses()) {
    if (clause.size() == 1) {
      units_.push_back(Code(clause[0]));
      continue;
    }
    const int id = static_cast<int>(clause_start_.size());
    clause_start_.push_back(static_cast<int>(clause_lits_.size()));
    for (Literal l : clause) clause_lits_.push_back(Code(l));
    watches_[clause_lits_[clause_start_[id]]].push_back(id);
    watches_[clause_lits_[clause_start_[id] + 1]].push_back(id);
  }
  clause_start_.push_back(static_cast<int>(clause_lits_.size()));

  for (int unit : units_) {
    const int v = LitValue(unit);
    if (v == 0) {
      root_conflict_ = true;
      break;
    }
    if (v < 0) Assign(unit);
  }
  if (!root_conflict_ && !Propagate()) root_conflict_ = true;
  root_trail_size_ = trail_.size();
}

void Solver::Assign(int lit) {
  value_[lit >> 1] = static_cast<int8_t>((lit & 1) ^ 1);
  trail_.push_back(lit);
}

void Solver::UndoTo(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    value_[trail_.back() >> 1] = -1;
    trail_.pop_back();
  }
  queue_head_ = std::min(queue_head_, trail_size);
}

bool Solver::Propagate() {
  while (queue_head_ < trail_.size()) {
    const int falsified = trail_[queue_head_++] ^ 1;
    std::vector<int>& ws = watches_[falsified];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const int id = ws[i];
      int* lits = clause_lits_.data() + clause_start_[id];
      const int len = clause_start_[id + 1] - clause_start_[id];
      if (lits[0] == falsified) std::swap(lits[0], lits[1]);
      if (LitValue(lits[0]) == 1) {
        ws[keep++] = id;
        continue;
      }
      bool moved = false;
      for (int k = 2; k < len; ++k) {
        if (LitValue(lits[k]) != 0) {
          std::swap(lits[1], lits[k]);
          watches_[lits[1]].push_back(id);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = id;
      if (LitValue(lits[0]) == 0) {
        for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
        ws.resize(keep);
        queue_head_ = trail_.size();
        return false;
      }
      Assign(lits[0]);
    }
    ws.resize(keep);
  }
  return true;
}

// Flips the most recent decision that still has an untried polarity,
// never touching the first `fixed_levels` decisions (assumptions).
bool Solver::Backtrack(std::size_t fixed_levels) {
  while (decisions_.size() > fixed_levels) {
    const Decision d = decisions_.back();
    decisions_.pop_back();
    UndoTo(d.trail_size);
    if (!d.flipped) {
      decisions_.push_back({trail_.size(), d.lit ^ 1, true});
      Assign(d.lit ^ 1);
      return true;
    }
  }
  return false;
}

int Solver::NextUnassigned() const {
  for (int v = 0; v < variable_count_; ++v) {
    if (value_[v] < 0) return v;
  }
  return -1;
}

void Solver::Reset() {
  decisions_.clear();
  UndoTo(root_trail_size_);
  queue_head_ = root_trail_size_;
}

bool Solver::Solve(std::span<const Literal> assumptions,
                   std::span<const std::uint8_t> phase) {
  Reset();
  if (root_conflict_) return false;
  for (Literal a : assumptions) {
    const int lit = Code(a);
    const int v = LitValue(lit);
    if (v == 0) return false;
    if (v == 1) continue;
    decisions_.push_back({trail_.size(), lit, true});
    Assign(lit);
    if (!Propagate()) return false;
  }
  const std::size_t fixed = decisions_.size();
  while (true) {
    if (!Propagate()) {
      if (!Backtrack(fixed)) return false;
      continue;
    }
    const int var = NextUnassigned();
    if (var < 0) break;
    const bool prefer_true = !phase.empty() && phase[var] != 0;
    const int lit = 2 * var + (prefer_true ? 0 : 1);
    decisions_.push_back({trail_.size(), lit, false});
    Assign(lit);
  }
  model_.assign(value_.begin(), value_.end());
  return true;
}

std::uint64_t Solver::ForEachSolution(
    const std::function<bool(std::span<const std::uint8_t>)>& visit) {
  Reset();
  if (root_conflict_) return 0;
  std::uint64_t count = 0;
  std::vector<std::uint8_t> assignment(variable_count_);
  while (true) {
    if (!Propagate()) {
      if (!Backtrack(0)) return count;
      continue;
    }
    const int var = NextUnassigned();
    if (var >= 0) {
      decisions_.push_back({trail_.size(), 2 * var + 1, false});
      Assign(2 * var + 1);
      continue;
    }
    ++count;
    std::copy(value_.begin(), value_.end(), assignment.begin());
    if (!visit(assignment)) return count;
    if (!Backtrack(0)) return count;
  }
}

bool IsSatisfiable(const CnfFormula& cnf,
                   std::span<const Assumption> assumptions) {
  for (Literal a : assumptions) {
    if (a.dimacs() == 0 || a.var() >= cnf.variable_count()) {
      throw Error(ErrorCode::kInvalidArgument, "assumption out of range");
    }
  }
  return Solver(cnf).Solve(assumptions);
}

std::vector<FeatureSet> EnumerateProducts(const FeatureModel& model,
                                          std::uint64_t cap) {
  Solver solver(ToCnf(model));
  std::vector<FeatureSet> products;
  bool overflow = false;
  solver.ForEachSolution([&](std::span<const std::uint8_t> a) {
    if (products.size() >= cap) {
      overflow = true;
      return false;
    }
    products.emplace_back(std::vector<std::uint8_t>(a.begin(), a.end()));
    return true;
  });
  if (overflow) throw CapExceededError(cap);
  return products;
}

std::uint64_t CountProducts(const FeatureModel& model, std::uint64_t cap) {
  Solver solver(ToCnf(model));
  bool overflow = false;
  std::uint64_t count = 0;
  solver.ForEachSolution([&](std::span<const std::uint8_t>) {
    if (count >= cap) {
      overflow = true;
      return false;
    }
    ++count;
    return true;
  });
  if (overflow) throw CapExceededError(cap);
  return count;
}

FeatureClassification ClassifyFeaturesWithSolver(const FeatureModel& model) {
  Solver solver(ToCnf(model));
  if (!solver.Solve({})) {
    throw Error(ErrorCode::kInvalidArgument,
                "model '" + model.name() + "' is void: it has no valid products");
  }
  FeatureClassification result;
  for (int i = 0; i < model.size(); ++i) {
    const Literal on = Literal::Positive(i);
    const Literal off = Literal::Negative(i);
    if (!solver.Solve(std::span(&on, 1))) {
      result.dead.push_back(i);
    } else if (!solver.Solve(std::span(&off, 1))) {
      result.core.push_back(i);
    } else {
      result.variant.push_back(i);
    }
  }
  return result;
}

}  // namespace splcit
